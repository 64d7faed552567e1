#include "mixquant/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixquant/error.hpp"

namespace mixquant {

namespace {

void require_two_segments(const MixedUniform& mu) {
    if (mu.size() != 2)
        throw Error(ErrorKind::Range, "expected a two-segment measure, got " + std::to_string(mu.size()));
}

void require_gap(const MixedUniform& mu) {
    require_two_segments(mu);
    if (!is_gapped(mu)) throw Error(ErrorKind::Gap, "the split formula needs a positive gap between segments");
}

void require_split(int n, int k) {
    if (k < 1 || k > n - 1)
        throw Error(ErrorKind::Range,
                    "k=" + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
}

// Piece error weight * L^2 / (12 j^2).
double piece_error(const Segment& s, int j) {
    const double L = s.length();
    return s.weight * L * L / (12.0 * double(j) * double(j));
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

// Unit segments [0,1] and [1,2] with left weight p.
bool is_unit_connected(const MixedUniform& mu, double p) {
    return mu.size() == 2 && near(mu[0].lo, 0.0) && near(mu[0].hi, 1.0) && near(mu[1].lo, 1.0) &&
           near(mu[1].hi, 2.0) && near(mu[0].weight, p);
}

}  // namespace

bool is_gapped(const MixedUniform& mu) noexcept { return mu.size() == 2 && mu[1].lo > mu[0].hi; }

bool is_connected_pair(const MixedUniform& mu) noexcept { return mu.size() == 2 && mu[1].lo == mu[0].hi; }

UniformQuantizerResult uniform_quantizer(const Segment& seg, int n) {
    if (n < 1) throw Error(ErrorKind::Range, "uniform_quantizer needs n >= 1");
    UniformQuantizerResult r;
    r.points.reserve(n);
    const double L = seg.length();
    for (int j = 1; j <= n; ++j) r.points.push_back(seg.lo + double(2 * j - 1) * L / (2.0 * n));
    r.error = piece_error(seg, n);
    return r;
}

SplitResult split_quantizer(const MixedUniform& mu, int n, int k) {
    require_gap(mu);
    require_split(n, k);
    auto left = uniform_quantizer(mu[0], k);
    auto right = uniform_quantizer(mu[1], n - k);
    SplitResult r;
    r.allocation = {k, n - k};
    r.points = std::move(left.points);
    r.points.insert(r.points.end(), right.points.begin(), right.points.end());
    r.error = left.error + right.error;
    return r;
}

double split_error(const MixedUniform& mu, int n, int k) {
    require_gap(mu);
    require_split(n, k);
    return piece_error(mu[0], k) + piece_error(mu[1], n - k);
}

int seed_sequence_a(int n) { return 8 * (n + 1) / 21; }

int seed_sequence_b(int n) { return 4 * (n + 1) / 7; }

int seed_allocation(const MixedUniform& mu, int n) {
    require_two_segments(mu);
    if (n < 2) throw Error(ErrorKind::Range, "seed_allocation needs n >= 2");
    if (is_unit_connected(mu, 0.2)) return seed_sequence_a(n);
    if (is_unit_connected(mu, 1.0 / 3.0)) return n - seed_sequence_b(n);

    // Minimizer over real k of w1 L1^2 / k^2 + w2 L2^2 / (n-k)^2.
    const double r = std::cbrt(mu[0].weight / mu[1].weight) *
                     std::cbrt((mu[0].length() / mu[1].length()) * (mu[0].length() / mu[1].length()));
    const double k = std::round(double(n) * r / (1.0 + r));
    return std::clamp(static_cast<int>(k), 1, n - 1);
}

int f_of_n(const MixedUniform& mu, int n) {
    require_gap(mu);
    if (n < 2) throw Error(ErrorKind::Range, "f_of_n needs n >= 2");
    auto V = [&](int k) { return split_error(mu, n, k); };
    // Convex in k, so descend from the seed. Leftward moves accept ties.
    int k = seed_allocation(mu, n);
    bool moved = false;
    while (k > 1 && V(k - 1) <= V(k)) {
        --k;
        moved = true;
    }
    if (!moved) {
        while (k < n - 1 && V(k + 1) < V(k)) ++k;
    }
    return k;
}

double high_resolution_limit(const MixedUniform& mu) noexcept {
    double s = 0.0;
    for (const auto& seg : mu.segments()) s += std::cbrt(seg.weight) * std::cbrt(seg.length() * seg.length());
    return s * s * s / 12.0;
}

}  // namespace mixquant
