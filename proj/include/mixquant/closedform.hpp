#ifndef MIXQUANT_CLOSEDFORM_HPP
#define MIXQUANT_CLOSEDFORM_HPP

#include <vector>

#include "mixquant/allocation.hpp"
#include "mixquant/measure.hpp"

namespace mixquant {

struct UniformQuantizerResult {
    std::vector<double> points;
    double error = 0.0;
};

struct SplitResult {
    Allocation allocation;
    std::vector<double> points;
    double error = 0.0;
};

/// Optimal n-means of the uniform piece `seg`, with the error weighted by seg.weight.
UniformQuantizerResult uniform_quantizer(const Segment& seg, int n);

/// k uniform points on the left segment and n-k on the right.
/// Throws Error{Gap} when the segments touch and Error{Range} when k is outside [1, n-1].
SplitResult split_quantizer(const MixedUniform& mu, int n, int k);

/// Error of split_quantizer without building the points. Same preconditions.
double split_error(const MixedUniform& mu, int n, int k);

/// a(n) = floor(8(n+1)/21).
int seed_sequence_a(int n);

/// b(n) = floor(4(n+1)/7).
int seed_sequence_b(int n);

/// Starting k for neighbor descent.
int seed_allocation(const MixedUniform& mu, int n);

/// argmin over k in [1, n-1] of split_error, ties to the smaller k.
int f_of_n(const MixedUniform& mu, int n);

/// lim n^2 V_n for a union of uniform pieces: (1/12) (sum w^(1/3) L^(2/3))^3.
double high_resolution_limit(const MixedUniform& mu) noexcept;

/// True when mu has two segments with a positive gap between them.
bool is_gapped(const MixedUniform& mu) noexcept;

/// True when mu has two segments that touch.
bool is_connected_pair(const MixedUniform& mu) noexcept;

}  // namespace mixquant

#endif
