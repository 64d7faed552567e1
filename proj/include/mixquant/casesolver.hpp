#ifndef MIXQUANT_CASESOLVER_HPP
#define MIXQUANT_CASESOLVER_HPP

#include <string_view>
#include <vector>

#include "mixquant/allocation.hpp"
#include "mixquant/measure.hpp"

namespace mixquant {

/// V1: the first right-hand point's cell reaches back over the junction.
/// V2: the last left-hand point's cell reaches forward over the junction.
/// SmallN: result of the exhaustive search, which may also place points in the gap.
enum class CaseTag { V1, V2, SmallN };

std::string_view to_string(CaseTag tag) noexcept;

struct CaseSolution {
    Allocation allocation;
    CaseTag tag = CaseTag::V1;
    std::vector<double> points;
    double distortion = 0.0;
    bool feasible = false;
    int gap_points = 0;  ///< points strictly between the two segments
};

/// A Lloyd fixed point with i equally spaced points on the left, one point c whose
/// cell may cover the junction or gap, and j equally spaced points on the right.
struct FixedPoint {
    int left = 0;
    int right = 0;
    double straddler = 0.0;
    std::vector<double> points;
    double distortion = 0.0;
    double residual = 0.0;  ///< centroid_residual of the configuration
};

/// Every fixed point of structure (left, right), found by bracketing the scalar
/// centroid residual of the straddling point. Two-segment measures only.
/// Throws Error{NoConvergence} if a bracketed root does not converge.
std::vector<FixedPoint> structure_fixed_points(const MixedUniform& mu, int left, int right);

/// Lowest-distortion fixed point consistent with the case. When none exists the
/// pure split (k left, m right) is returned with feasible = false.
CaseSolution solve_case(const MixedUniform& mu, Allocation alloc, CaseTag tag);

/// Better feasible case, ties to V1. Throws Error{Infeasible} if neither is feasible.
CaseSolution best_split(const MixedUniform& mu, Allocation alloc);

/// Global optimum over every structure, gap placements included. Any n >= 1.
CaseSolution solve_exhaustive(const MixedUniform& mu, int n);

/// solve_exhaustive for n <= 4, confirmed by unrestricted Lloyd runs seeded in
/// every region assignment. Throws Error{Range} for n > 4.
CaseSolution solve_small_n(const MixedUniform& mu, int n);

/// Smallest N such that for every n in [N, probe_limit] the exhaustive optimum on a
/// gapped measure is the split formula at f_of_n. Returns probe_limit + 1 if even
/// n = probe_limit disagrees. Throws Error{Gap} for touching segments.
int split_threshold(const MixedUniform& mu, int probe_limit = 24);

}  // namespace mixquant

#endif
