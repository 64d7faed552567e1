#include "mixquant/casesolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "mixquant/closedform.hpp"
#include "mixquant/error.hpp"

namespace mixquant {

namespace {

constexpr double kCentroidTolerance = 1e-10;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/*
 * Geometry of a two-piece support [l1, h1] u [l2, h2] (l2 >= h1).
 *
 * In a fixed point with structure (i, j) the i left points sit in cells that only
 * see the left piece, so they are the uniform quantizer of [l1, e] for e = min(x, h1),
 * where x is the boundary with the straddling point c. The boundary is then a
 * function of c alone, and likewise on the right. Solving E(X | [x(c), y(c)]) = c
 * in the scalar c finds every fixed point of the structure.
 */
struct TwoPiece {
    const MixedUniform& mu;
    double l1, h1, l2, h2;

    explicit TwoPiece(const MixedUniform& m)
        : mu(m), l1(m[0].lo), h1(m[0].hi), l2(m[1].lo), h2(m[1].hi) {}

    double span() const { return h2 - l1; }

    std::optional<double> left_boundary(double c, int i) const {
        if (i == 0) return l1;
        const double x = (2.0 * i * c + l1) / (2.0 * i + 1.0);
        if (x <= h1) return x;
        // Left block fills the whole piece; the boundary falls in the gap.
        const double g = 0.5 * (left_full_last(i) + c);
        if (g <= l2) return g;
        return std::nullopt;
    }

    std::optional<double> right_boundary(double c, int j) const {
        if (j == 0) return h2;
        const double y = (2.0 * j * c + h2) / (2.0 * j + 1.0);
        if (y >= l2) return y;
        const double g = 0.5 * (c + right_full_first(j));
        if (g >= h1) return g;
        return std::nullopt;
    }

    double left_full_last(int i) const { return h1 - (h1 - l1) / (2.0 * i); }
    double right_full_first(int j) const { return l2 + (h2 - l2) / (2.0 * j); }

    double residual(double c, int i, int j) const {
        const auto x = left_boundary(c, i);
        const auto y = right_boundary(c, j);
        if (!x || !y || !(*y > *x)) return kNaN;
        const double m = mu.mass(*x, *y);
        if (!(m > 0.0)) return kNaN;
        return mu.first_moment(*x, *y) / m - c;
    }

    std::vector<double> configuration(double c, int i, int j) const {
        std::vector<double> pts;
        pts.reserve(static_cast<std::size_t>(i + j + 1));
        const double e = std::min(*left_boundary(c, i), h1);
        for (int r = 1; r <= i; ++r) pts.push_back(l1 + (2.0 * r - 1.0) * (e - l1) / (2.0 * i));
        pts.push_back(c);
        const double s = std::max(*right_boundary(c, j), l2);
        for (int r = 1; r <= j; ++r) pts.push_back(s + (2.0 * r - 1.0) * (h2 - s) / (2.0 * j));
        return pts;
    }

    // Bracketing grid: coarse uniform points plus geometric clusters around every
    // place where the residual changes formula.
    std::vector<double> grid(int i, int j) const {
        const double L = span();
        std::vector<double> anchors{h1, l2};
        if (i > 0) {
            anchors.push_back(h1 + (h1 - l1) / (2.0 * i));
            anchors.push_back(2.0 * l2 - left_full_last(i));
        }
        if (j > 0) {
            anchors.push_back(l2 - (h2 - l2) / (2.0 * j));
            anchors.push_back(2.0 * h1 - right_full_first(j));
        }
        std::vector<double> g;
        constexpr int kCoarse = 64;
        for (int t = 0; t <= kCoarse; ++t) g.push_back(l1 + L * t / kCoarse);
        for (double a : anchors) {
            g.push_back(a);
            for (double k = 0.5; k <= 12.0; k += 0.5) {
                const double d = L * std::pow(10.0, -k);
                g.push_back(a - d);
                g.push_back(a + d);
            }
        }
        std::erase_if(g, [&](double v) { return !(v >= l1 && v <= h2); });
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        return g;
    }
};

std::vector<double> straddler_roots(const TwoPiece& tp, int i, int j) {
    const auto g = tp.grid(i, j);
    std::vector<double> phi(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) phi[t] = tp.residual(g[t], i, j);

    const double L = tp.span();
    const double zero_tol = 1e-13 * L;
    std::vector<double> roots;
    for (std::size_t t = 0; t < g.size(); ++t) {
        if (std::isfinite(phi[t]) && std::abs(phi[t]) <= zero_tol) roots.push_back(g[t]);
    }
    for (std::size_t t = 0; t + 1 < g.size(); ++t) {
        const double fa = phi[t];
        const double fb = phi[t + 1];
        if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
        if (std::abs(fa) <= zero_tol || std::abs(fb) <= zero_tol) continue;
        if ((fa < 0.0) == (fb < 0.0)) continue;
        std::uintmax_t iters = 200;
        const auto f = [&](double c) {
            const double v = tp.residual(c, i, j);
            // Validity does not change inside a bracket; guard against rounding at the ends.
            return std::isfinite(v) ? v : (c - g[t] < g[t + 1] - c ? fa : fb);
        };
        const auto [a, b] = boost::math::tools::toms748_solve(
            f, g[t], g[t + 1], fa, fb, boost::math::tools::eps_tolerance<double>(50), iters);
        if (iters >= 200)
            throw Error(ErrorKind::NoConvergence,
                        "straddler root did not converge for structure (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
        roots.push_back(0.5 * (a + b));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double a, double b) { return std::abs(a - b) <= 1e-12 * L; }),
                roots.end());
    return roots;
}

void require_pair(const MixedUniform& mu) {
    if (mu.size() != 2)
        throw Error(ErrorKind::Range, "expected a two-segment measure, got " + std::to_string(mu.size()));
}

void require_allocation(Allocation a) {
    if (a.k < 1 || a.m < 1)
        throw Error(ErrorKind::Range,
                    "allocation (" + std::to_string(a.k) + ", " + std::to_string(a.m) + ") needs k, m >= 1");
}

CaseSolution pure_split(const MixedUniform& mu, Allocation a, CaseTag tag) {
    CaseSolution s;
    s.allocation = a;
    s.tag = tag;
    s.points = uniform_quantizer(mu[0], a.k).points;
    const auto right = uniform_quantizer(mu[1], a.m).points;
    s.points.insert(s.points.end(), right.begin(), right.end());
    s.distortion = distortion(mu, s.points);
    s.feasible = false;
    return s;
}

// Unrestricted Lloyd alternation. nullopt when a cell loses all mass.
std::optional<std::vector<double>> alternate(const MixedUniform& mu, std::vector<double> pts) {
    for (int it = 0; it < 10000; ++it) {
        const auto bounds = voronoi_boundaries(pts);
        double move = 0.0;
        std::vector<double> next(pts.size());
        for (std::size_t r = 0; r < pts.size(); ++r) {
            const double lo = r == 0 ? mu.support_lo() : bounds[r - 1];
            const double hi = r + 1 == pts.size() ? mu.support_hi() : bounds[r];
            if (!(mu.mass(lo, hi) > 0.0)) return std::nullopt;
            next[r] = conditional_mean(mu, lo, hi);
            move = std::max(move, std::abs(next[r] - pts[r]));
        }
        pts = std::move(next);
        if (move < 1e-13) break;
    }
    return pts;
}

std::vector<double> spread(double lo, double hi, int count) {
    std::vector<double> v;
    for (int r = 1; r <= count; ++r) v.push_back(lo + (hi - lo) * r / (count + 1.0));
    return v;
}

CaseSolution classify(const MixedUniform& mu, std::vector<double> points, double dist) {
    const double tol = 1e-12 * (mu.support_hi() - mu.support_lo());
    CaseSolution s;
    s.tag = CaseTag::SmallN;
    s.feasible = true;
    s.distortion = dist;
    for (double x : points) {
        if (x <= mu[0].hi + tol)
            ++s.allocation.k;
        else if (x >= mu[1].lo - tol)
            ++s.allocation.m;
        else
            ++s.gap_points;
    }
    s.points = std::move(points);
    return s;
}

}  // namespace

std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::V1: return "V1";
        case CaseTag::V2: return "V2";
        case CaseTag::SmallN: return "small-n";
    }
    return "?";
}

std::vector<FixedPoint> structure_fixed_points(const MixedUniform& mu, int left, int right) {
    require_pair(mu);
    if (left < 0 || right < 0) throw Error(ErrorKind::Range, "structure counts must be non-negative");
    const TwoPiece tp(mu);
    std::vector<FixedPoint> out;
    for (double c : straddler_roots(tp, left, right)) {
        FixedPoint fp;
        fp.left = left;
        fp.right = right;
        fp.straddler = c;
        fp.points = tp.configuration(c, left, right);
        fp.distortion = distortion(mu, fp.points);
        fp.residual = centroid_residual(mu, fp.points);
        out.push_back(std::move(fp));
    }
    return out;
}

CaseSolution solve_case(const MixedUniform& mu, Allocation alloc, CaseTag tag) {
    require_pair(mu);
    require_allocation(alloc);
    if (tag == CaseTag::SmallN) throw Error(ErrorKind::Range, "solve_case takes V1 or V2");

    const double tol = 1e-12 * (mu.support_hi() - mu.support_lo());
    const bool v1 = tag == CaseTag::V1;
    const auto fps = v1 ? structure_fixed_points(mu, alloc.k, alloc.m - 1)
                        : structure_fixed_points(mu, alloc.k - 1, alloc.m);

    const FixedPoint* best = nullptr;
    for (const auto& fp : fps) {
        const bool placed = v1 ? fp.straddler >= mu[1].lo - tol : fp.straddler <= mu[0].hi + tol;
        if (!placed || !(fp.residual <= kCentroidTolerance)) continue;
        if (!best || fp.distortion < best->distortion) best = &fp;
    }
    if (!best) return pure_split(mu, alloc, tag);

    CaseSolution s;
    s.allocation = alloc;
    s.tag = tag;
    s.points = best->points;
    s.distortion = best->distortion;
    s.feasible = true;
    return s;
}

CaseSolution best_split(const MixedUniform& mu, Allocation alloc) {
    auto v1 = solve_case(mu, alloc, CaseTag::V1);
    auto v2 = solve_case(mu, alloc, CaseTag::V2);
    if (v1.feasible && (!v2.feasible || v1.distortion <= v2.distortion)) return v1;
    if (v2.feasible) return v2;
    throw Error(ErrorKind::Infeasible, "no feasible case for allocation (" + std::to_string(alloc.k) +
                                           ", " + std::to_string(alloc.m) + ")");
}

CaseSolution solve_exhaustive(const MixedUniform& mu, int n) {
    require_pair(mu);
    if (n < 1) throw Error(ErrorKind::Range, "n must be at least 1");
    const FixedPoint* best = nullptr;
    std::vector<std::vector<FixedPoint>> all;
    all.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        all.push_back(structure_fixed_points(mu, i, n - 1 - i));
        for (const auto& fp : all.back()) {
            if (!(fp.residual <= kCentroidTolerance)) continue;
            if (!best || fp.distortion < best->distortion) best = &fp;
        }
    }
    if (!best) throw Error(ErrorKind::Infeasible, "no fixed point found for n=" + std::to_string(n));
    return classify(mu, best->points, best->distortion);
}

CaseSolution solve_small_n(const MixedUniform& mu, int n) {
    if (n < 1 || n > 4) throw Error(ErrorKind::Range, "solve_small_n handles 1 <= n <= 4");
    auto best = solve_exhaustive(mu, n);

    // Independent confirmation: Lloyd seeded with each split across left, gap, right.
    const bool gapped = is_gapped(mu);
    for (int g = 0; g <= (gapped ? 1 : 0); ++g) {
        for (int l = 0; l + g <= n; ++l) {
            const int r = n - g - l;
            auto seed = spread(mu[0].lo, mu[0].hi, l);
            if (g) seed.push_back(0.5 * (mu[0].hi + mu[1].lo));
            const auto right = spread(mu[1].lo, mu[1].hi, r);
            seed.insert(seed.end(), right.begin(), right.end());
            const auto pts = alternate(mu, std::move(seed));
            if (!pts || !(centroid_residual(mu, *pts) <= kCentroidTolerance)) continue;
            const double d = distortion(mu, *pts);
            if (d < best.distortion * (1.0 - 1e-12)) best = classify(mu, *pts, d);
        }
    }
    return best;
}

int split_threshold(const MixedUniform& mu, int probe_limit) {
    require_pair(mu);
    if (!is_gapped(mu)) throw Error(ErrorKind::Gap, "split_threshold needs a positive gap");
    if (probe_limit < 2) throw Error(ErrorKind::Range, "probe_limit must be at least 2");
    const auto agrees = [&](int n) {
        const auto ex = solve_exhaustive(mu, n);
        const double s = split_error(mu, n, f_of_n(mu, n));
        return ex.gap_points == 0 && std::abs(ex.distortion - s) <= 1e-9 * s;
    };
    int N = probe_limit + 1;
    while (N - 1 >= 2 && agrees(N - 1)) --N;
    return N;
}

}  // namespace mixquant
