#ifndef MIXQUANT_ALLOCSEARCH_HPP
#define MIXQUANT_ALLOCSEARCH_HPP

#include <vector>

#include "mixquant/allocation.hpp"
#include "mixquant/casesolver.hpp"
#include "mixquant/measure.hpp"

namespace mixquant {

struct SolveReport {
    int n = 0;
    Allocation allocation;
    CaseTag tag = CaseTag::V1;
    std::vector<double> points;
    double distortion = 0.0;
    int descent_steps = 0;
    int seed_k = 0;
    int gap_points = 0;
};

/// Starts at seed_allocation and walks to a strictly better neighbour until none is.
/// Infeasible allocations count as +infinity. Throws Error{Infeasible} if no k works.
SolveReport neighbor_descent(const MixedUniform& mu, int n);

/// Scans every k in [1, n-1]. Gapped measures use the split formula once n reaches
/// split_threshold. Throws Error{Cap} when n > cap.
SolveReport argmin_allocation(const MixedUniform& mu, int n, int cap = 2000);

/// Front door: exhaustive search where the structure is not yet settled (n = 1, or a
/// gapped measure below its split threshold), neighbor descent otherwise.
SolveReport solve(const MixedUniform& mu, int n);

}  // namespace mixquant

#endif
