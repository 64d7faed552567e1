#include "mixquant/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mixquant/error.hpp"

namespace mixquant {

namespace {

constexpr double kWeightTolerance = 1e-12;

std::string describe(const Segment& s) {
    std::ostringstream os;
    os.precision(17);
    os << "[" << s.lo << ", " << s.hi << "] weight " << s.weight;
    return os.str();
}

// Overlap of [lo, hi] with a segment, or an empty range.
struct Piece {
    double a;
    double b;
    double density;
    bool empty() const { return !(b > a); }
};

Piece clip(const Segment& s, double lo, double hi) {
    return {std::max(lo, s.lo), std::min(hi, s.hi), s.density()};
}

}  // namespace

MixedUniform make_mixed_uniform(std::vector<Segment> segments, Normalization normalization) {
    if (segments.empty()) throw Error(ErrorKind::Degenerate, "a measure needs at least one segment");
    for (const auto& s : segments) {
        if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || !(s.lo < s.hi))
            throw Error(ErrorKind::Degenerate, "segment " + describe(s) + " has lo >= hi");
        if (!std::isfinite(s.weight) || !(s.weight > 0.0))
            throw Error(ErrorKind::Weight, "segment " + describe(s) + " needs a positive weight");
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < segments.size(); ++i) {
        if (segments[i].lo < segments[i - 1].hi)
            throw Error(ErrorKind::Overlap,
                        describe(segments[i - 1]) + " overlaps " + describe(segments[i]));
    }

    double total = 0.0;
    for (const auto& s : segments) total += s.weight;
    if (normalization == Normalization::Normalize) {
        for (auto& s : segments) s.weight /= total;
    } else if (std::abs(total - 1.0) > kWeightTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "weights sum to " << total << ", expected 1";
        throw Error(ErrorKind::Weight, os.str());
    }
    for (const auto& s : segments) {
        if (s.weight > 1.0 + kWeightTolerance)
            throw Error(ErrorKind::Weight, "segment " + describe(s) + " has weight above 1");
    }
    return MixedUniform(std::move(segments));
}

double MixedUniform::mass(double lo, double hi) const noexcept {
    double m = 0.0;
    for (const auto& s : segments_) {
        const Piece p = clip(s, lo, hi);
        if (!p.empty()) m += p.density * (p.b - p.a);
    }
    return m;
}

double MixedUniform::first_moment(double lo, double hi) const noexcept {
    double f = 0.0;
    for (const auto& s : segments_) {
        const Piece p = clip(s, lo, hi);
        if (!p.empty()) f += p.density * (p.b - p.a) * 0.5 * (p.a + p.b);
    }
    return f;
}

double mean(const MixedUniform& mu) noexcept {
    double m = 0.0;
    for (const auto& s : mu.segments()) m += s.weight * 0.5 * (s.lo + s.hi);
    return m;
}

double variance(const MixedUniform& mu) noexcept {
    return interval_distortion(mu, mu.support_lo(), mu.support_hi(), mean(mu));
}

double conditional_mean(const MixedUniform& mu, double lo, double hi) {
    const double m = mu.mass(lo, hi);
    if (!(m > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "interval [" << lo << ", " << hi << "] carries no mass";
        throw Error(ErrorKind::ZeroMass, os.str());
    }
    // Mass-weighted midpoints keep the quotient well conditioned.
    double num = 0.0;
    for (const auto& s : mu.segments()) {
        const Piece p = clip(s, lo, hi);
        if (!p.empty()) num += p.density * (p.b - p.a) * 0.5 * (p.a + p.b);
    }
    return num / m;
}

double interval_distortion(const MixedUniform& mu, double lo, double hi, double c) noexcept {
    double d = 0.0;
    for (const auto& s : mu.segments()) {
        const Piece p = clip(s, lo, hi);
        if (p.empty()) continue;
        // (u^3 - v^3)/3 with u = b-c, v = a-c, factored to avoid cancellation.
        const double u = p.b - c;
        const double v = p.a - c;
        d += p.density * (p.b - p.a) * (u * u + u * v + v * v) / 3.0;
    }
    return d;
}

MixedUniform affine_image(const MixedUniform& mu, double scale, double shift) {
    if (!(scale > 0.0)) throw Error(ErrorKind::Range, "affine scale must be positive");
    std::vector<Segment> out;
    out.reserve(mu.size());
    for (const auto& s : mu.segments())
        out.push_back({scale * s.lo + shift, scale * s.hi + shift, s.weight});
    return make_mixed_uniform(std::move(out), Normalization::Normalize);
}

std::vector<double> voronoi_boundaries(std::span<const double> points) {
    std::vector<double> b;
    if (points.size() < 2) return b;
    b.reserve(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) b.push_back(0.5 * (points[i] + points[i + 1]));
    return b;
}

namespace {

template <class Fn>
void for_each_cell(const MixedUniform& mu, std::span<const double> points, Fn&& fn) {
    const auto bounds = voronoi_boundaries(points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double lo = i == 0 ? mu.support_lo() : bounds[i - 1];
        const double hi = i + 1 == points.size() ? mu.support_hi() : bounds[i];
        fn(i, lo, hi);
    }
}

}  // namespace

double distortion(const MixedUniform& mu, std::span<const double> points) {
    if (points.empty()) throw Error(ErrorKind::Range, "distortion of an empty point set");
    double total = 0.0;
    for_each_cell(mu, points, [&](std::size_t i, double lo, double hi) {
        if (hi > lo) total += interval_distortion(mu, lo, hi, points[i]);
    });
    return total;
}

double centroid_residual(const MixedUniform& mu, std::span<const double> points) {
    double worst = 0.0;
    for_each_cell(mu, points, [&](std::size_t i, double lo, double hi) {
        if (!(hi > lo) || !(mu.mass(lo, hi) > 0.0)) {
            worst = std::numeric_limits<double>::infinity();
            return;
        }
        worst = std::max(worst, std::abs(points[i] - conditional_mean(mu, lo, hi)));
    });
    return worst;
}

}  // namespace mixquant
