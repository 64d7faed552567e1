#include "mixquant/error.hpp"

namespace mixquant {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Overlap: return "overlap-error";
        case ErrorKind::Weight: return "weight-error";
        case ErrorKind::Degenerate: return "degenerate-error";
        case ErrorKind::ZeroMass: return "zero-mass-error";
        case ErrorKind::Gap: return "gap-error";
        case ErrorKind::Range: return "range-error";
        case ErrorKind::NoConvergence: return "no-convergence-error";
        case ErrorKind::Infeasible: return "infeasible-error";
        case ErrorKind::Cap: return "cap-error";
        case ErrorKind::EmptyCell: return "empty-cell-error";
        case ErrorKind::Parse: return "parse-error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace mixquant
