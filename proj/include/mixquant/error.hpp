#ifndef MIXQUANT_ERROR_HPP
#define MIXQUANT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixquant {

enum class ErrorKind {
    Overlap,
    Weight,
    Degenerate,
    ZeroMass,
    Gap,
    Range,
    NoConvergence,
    Infeasible,
    Cap,
    EmptyCell,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mixquant

#endif
