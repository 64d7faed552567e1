#ifndef MIXQUANT_MEASURE_HPP
#define MIXQUANT_MEASURE_HPP

#include <span>
#include <vector>

namespace mixquant {

/// One uniform piece of a mixture: constant density weight/(hi-lo) on [lo, hi].
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    double weight = 0.0;

    double length() const noexcept { return hi - lo; }
    double density() const noexcept { return weight / (hi - lo); }
};

enum class Normalization {
    Strict,     ///< weights must already sum to 1 within 1e-12
    Normalize,  ///< weights are rescaled to sum to 1
};

/**
 * A probability measure that is a finite mixture of uniform distributions on
 * closed intervals with pairwise disjoint interiors.
 *
 * Segments are kept sorted by `lo`. Touching segments ([0,1] and [1,2]) are not
 * merged, so a connected support still reports two pieces.
 */
class MixedUniform {
public:
    std::span<const Segment> segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    const Segment& operator[](std::size_t i) const { return segments_[i]; }

    double support_lo() const noexcept { return segments_.front().lo; }
    double support_hi() const noexcept { return segments_.back().hi; }

    /// P([lo, hi]).
    double mass(double lo, double hi) const noexcept;

    /// Integral of x dP over [lo, hi].
    double first_moment(double lo, double hi) const noexcept;

private:
    friend MixedUniform make_mixed_uniform(std::vector<Segment>, Normalization);
    explicit MixedUniform(std::vector<Segment> segments) : segments_(std::move(segments)) {}

    std::vector<Segment> segments_;
};

/// Validates and sorts the segments. Throws Error{Overlap|Weight|Degenerate}.
MixedUniform make_mixed_uniform(std::vector<Segment> segments,
                                Normalization normalization = Normalization::Strict);

double mean(const MixedUniform& mu) noexcept;

/// Variance of X ~ mu; this is also the one-point quantization error.
double variance(const MixedUniform& mu) noexcept;

/// E(X | X in [lo, hi]). Throws Error{ZeroMass} when the interval carries no mass.
double conditional_mean(const MixedUniform& mu, double lo, double hi);

/// Integral over [lo, hi] of (x - c)^2 dP. Zero when the interval has no mass.
double interval_distortion(const MixedUniform& mu, double lo, double hi, double c) noexcept;

/// Image of mu under x -> scale * x + shift (scale > 0).
MixedUniform affine_image(const MixedUniform& mu, double scale, double shift);

// Quantizer evaluation on a sorted point set.

/// Midpoints between consecutive points (size n-1).
std::vector<double> voronoi_boundaries(std::span<const double> points);

/// Total distortion: sum over Voronoi cells of interval_distortion.
double distortion(const MixedUniform& mu, std::span<const double> points);

/// Largest |a - E(X | X in M(a))| over the points; +infinity if any cell has no mass.
double centroid_residual(const MixedUniform& mu, std::span<const double> points);

}  // namespace mixquant

#endif
