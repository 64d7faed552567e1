#include <doctest.h>

#include <cmath>

#include "mixquant/closedform.hpp"
#include "mixquant/error.hpp"
#include "mixquant/presets.hpp"

using namespace mixquant;

namespace {

MixedUniform thirds(double p) { return make_preset("gapped-thirds-p", p); }

void check_points(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-14) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

// Reference argmin by scanning every k.
int scan_argmin(const MixedUniform& mu, int n) {
    int best = 1;
    for (int k = 2; k <= n - 1; ++k)
        if (split_error(mu, n, k) < split_error(mu, n, best)) best = k;
    return best;
}

}  // namespace

TEST_CASE("uniform quantizer") {
    auto r = uniform_quantizer({0, 1, 1}, 1);
    check_points(r.points, {0.5});
    CHECK(r.error == doctest::Approx(1.0 / 12).epsilon(1e-15));

    r = uniform_quantizer({2.0 / 3, 1, 0.99}, 1);
    check_points(r.points, {5.0 / 6});
    CHECK(r.error == doctest::Approx(11.0 / 1200).epsilon(1e-14));

    r = uniform_quantizer({0, 1.0 / 3, 0.01}, 2);
    check_points(r.points, {1.0 / 12, 1.0 / 4});
    CHECK(r.error == doctest::Approx((1.0 / 27) * (3.0 / 100) / 48).epsilon(1e-14));
}

TEST_CASE("split quantizer") {
    auto s = split_quantizer(thirds(0.01), 3, 1);
    check_points(s.points, {1.0 / 6, 3.0 / 4, 11.0 / 12});
    CHECK(s.error == doctest::Approx(103.0 / 43200).epsilon(1e-13));

    s = split_quantizer(thirds(0.4), 4, 2);
    check_points(s.points, {1.0 / 12, 1.0 / 4, 3.0 / 4, 11.0 / 12});
    CHECK(s.error == doctest::Approx(1.0 / 432).epsilon(1e-13));

    s = split_quantizer(thirds(0.001), 5, 1);
    check_points(s.points, {1.0 / 6, 17.0 / 24, 19.0 / 24, 7.0 / 8, 23.0 / 24});
    CHECK(std::abs(s.error - 0.000587384) <= 5e-10);

    const auto c = make_preset("connected-p", 0.2);
    CHECK_THROWS_AS(split_quantizer(c, 3, 1), Error);
    try {
        split_quantizer(c, 3, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Gap);
    }
    try {
        split_quantizer(thirds(0.01), 3, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Range);
    }
}

TEST_CASE("seed sequences and seed allocation") {
    CHECK(seed_allocation(make_preset("connected-p", 0.2), 30) == 11);
    CHECK(seed_sequence_b(100) == 57);
    CHECK(seed_allocation(make_preset("connected-p", 1.0 / 3), 100) == 43);

    const double r = std::cbrt(0.01 / 0.99);
    const int expected = static_cast<int>(std::lround(5000 * r / (1 + r)));
    const int seed = seed_allocation(thirds(0.01), 5000);
    CHECK(seed == expected);
    CHECK(seed >= 886);
    CHECK(seed <= 891);
}

TEST_CASE("f(n) examples") {
    CHECK(f_of_n(thirds(0.01), 8) == 2);
    CHECK(f_of_n(thirds(0.01), 4985) == 886);
    CHECK(f_of_n(thirds(0.4), 2) == 1);
    CHECK_THROWS_AS(f_of_n(make_preset("connected-p", 0.2), 8), Error);
}

TEST_CASE("f(n) equals the exhaustive argmin and the sequence is convex") {
    for (double p : {0.01, 0.4, 0.001}) {
        const auto mu = thirds(p);
        for (int n = 2; n <= 500; ++n) {
            CHECK(f_of_n(mu, n) == scan_argmin(mu, n));
            int local_minima = 0;
            for (int k = 1; k <= n - 1; ++k) {
                const double v = split_error(mu, n, k);
                const bool left = k == 1 || split_error(mu, n, k - 1) > v;
                const bool right = k == n - 1 || split_error(mu, n, k + 1) >= v;
                local_minima += left && right;
            }
            CHECK(local_minima == 1);
        }
    }
}

TEST_CASE("split error decays like n^-2 towards the high-resolution limit") {
    for (double p : {0.01, 0.4, 0.001}) {
        const auto mu = thirds(p);
        const double limit = high_resolution_limit(mu);
        // Equal lengths L = 1/3: (L^2/12)(p^(1/3) + (1-p)^(1/3))^3.
        CHECK(limit == doctest::Approx(std::pow(std::cbrt(p) + std::cbrt(1 - p), 3) / 108).epsilon(1e-14));
        double prev = INFINITY;
        for (int n = 2; n <= 1000; ++n) {
            const double v = split_error(mu, n, f_of_n(mu, n));
            CHECK(v <= prev);
            prev = v;
            if (n >= 100) CHECK(std::abs(n * double(n) * v / limit - 1.0) <= 0.05);
        }
    }
}

TEST_CASE("split quantizer points are centroids of their cells") {
    for (double p : {0.01, 0.4, 0.001}) {
        const auto mu = thirds(p);
        for (int n : {3, 7, 40, 211}) {
            const auto s = split_quantizer(mu, n, f_of_n(mu, n));
            CHECK(centroid_residual(mu, s.points) <= 1e-12);
        }
    }
}

TEST_CASE("seed allocation stays close to f(n)") {
    for (double p : {0.01, 0.4, 0.001}) {
        const auto mu = thirds(p);
        int worst = 0;
        for (int n = 2; n <= 5011; ++n) worst = std::max(worst, std::abs(seed_allocation(mu, n) - f_of_n(mu, n)));
        CHECK(worst <= 6);
    }
}
