#ifndef MIXQUANT_ORACLE_HPP
#define MIXQUANT_ORACLE_HPP

#include <span>
#include <vector>

#include "mixquant/measure.hpp"

namespace mixquant {

struct DiscreteMeasure {
    std::vector<double> positions;  ///< strictly increasing
    std::vector<double> weights;    ///< positive, sum to 1
};

struct OracleResult {
    std::vector<double> points;
    double error = 0.0;
    int iterations = 0;  ///< Lloyd sweeps; 0 for the DP
};

/// Midpoint rule: round(M * weight) atoms per segment (at least one), topped up to M
/// by largest remainder, each atom carrying an equal share of its segment's weight.
DiscreteMeasure discretize(const MixedUniform& mu, int M);

/// Builds a DiscreteMeasure from raw atoms. Sorts, and rejects non-positive weights.
DiscreteMeasure make_discrete(std::vector<double> positions, std::vector<double> weights);

enum class DpMethod {
    DivideAndConquer,  ///< O(n A log A), exploits monotone split points
    Quadratic,         ///< O(n A^2) reference
};

/// Exact optimal n-point quantizer of the atoms by interval dynamic programming.
OracleResult dp_optimal_quantizer(const DiscreteMeasure& dm, int n,
                                  DpMethod method = DpMethod::DivideAndConquer);

/// Optimal errors for 1..n points from a single DP pass (index 0 holds n = 1).
std::vector<double> dp_error_profile(const DiscreteMeasure& dm, int n,
                                     DpMethod method = DpMethod::DivideAndConquer);

/// Lloyd iteration on the continuous measure from sorted, distinct `init` points.
/// Throws Error{EmptyCell} when a cell loses all mass and Error{NoConvergence} when
/// 10^4 sweeps end with movement above 1e-10.
OracleResult lloyd(const MixedUniform& mu, std::span<const double> init);

}  // namespace mixquant

#endif
