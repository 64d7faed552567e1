// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Reference values are transcribed here independently of the CLI's reproduce table.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mixquant/allocsearch.hpp"
#include "mixquant/casesolver.hpp"
#include "mixquant/closedform.hpp"
#include "mixquant/error.hpp"
#include "mixquant/oracle.hpp"
#include "mixquant/presets.hpp"
#include "support/reference.hpp"

using namespace mixquant;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    std::vector<std::string> failures;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

// "a/b" is exact to 1e-12; a decimal gets max(5e-7, half a unit in its last place).
struct Ref {
    double value;
    double tol;
};

Ref ref(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) return {std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1)), 1e-12};
    const auto dot = s.find('.');
    const int places = dot == std::string::npos ? 0 : int(s.size() - dot - 1);
    return {std::stod(s), std::max(5e-7, 0.5 * std::pow(10.0, -places))};
}

std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.9g", x);
    return b;
}

// budget <= 0 means the criterion states no runtime limit.
bool report(int id, const std::string& title, const Outcome& o, double seconds, double budget) {
    const bool in_time = budget <= 0 || seconds < budget;
    const bool ok = o.failures.empty() && in_time;
    std::string limit = budget > 0 ? ", budget " + fmt(budget) + " s" : "";
    std::printf("[%s] criterion %d: %s (%d checks, %zu failed, %.2f s%s)\n", ok ? "PASS" : "FAIL", id,
                title.c_str(), o.checks, o.failures.size(), seconds, limit.c_str());
    for (const auto& f : o.failures) std::printf("         - %s\n", f.c_str());
    if (!in_time) std::printf("         - over the runtime budget\n");
    std::fflush(stdout);
    return ok;
}

template <class Fn>
bool criterion(int id, const std::string& title, double budget, Fn&& body) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    return report(id, title, o, std::chrono::duration<double>(Clock::now() - t0).count(), budget);
}

MixedUniform preset(const char* name, double p) { return make_preset(name, p); }

void golden(Outcome& o, const std::string& label, const MixedUniform& mu, int n, const std::string& V,
            const std::vector<std::string>& set) {
    const auto r = solve(mu, n);
    const auto v = ref(V);
    o.expect(std::abs(r.distortion - v.value) <= v.tol,
             label + " V" + std::to_string(n) + ": expected " + V + ", got " + fmt(r.distortion));
    bool same = r.points.size() == set.size();
    for (std::size_t i = 0; same && i < set.size(); ++i) {
        const auto e = ref(set[i]);
        same = std::abs(r.points[i] - e.value) <= e.tol;
    }
    std::string got;
    for (double x : r.points) got += (got.empty() ? "" : ", ") + fmt(x);
    o.expect(same, label + " set n=" + std::to_string(n) + ": got {" + got + "}");
}

void c1_golden(Outcome& o) {
    const auto c5 = preset("connected-p", 0.2);
    const auto c3 = preset("connected-p", 1.0 / 3);
    const auto t100 = preset("gapped-thirds-p", 0.01);
    const auto t25 = preset("gapped-thirds-p", 0.4);
    const auto t1000 = preset("gapped-thirds-p", 0.001);

    golden(o, "p=1/5", c5, 1, "73/300", {"13/10"});
    golden(o, "p=1/5", c5, 2, "317/3840", {"11/16", "25/16"});
    golden(o, "p=1/5", c5, 3, "0.0295695", {"0.400679", "1.202036", "1.734012"});
    golden(o, "p=1/3", c3, 2, "1/12", {"1/2", "3/2"});
    golden(o, "p=1/3", c3, 3, "0.0343006", {"0.380129", "1.14039", "1.71346"});
    golden(o, "p=1/100", t100, 2, "0.005682", {"0.731517", "0.910506"});
    golden(o, "p=1/100", t100, 3, "103/43200", {"1/6", "3/4", "11/12"});
    golden(o, "p=2/5", t25, 2, "1/108", {"1/6", "5/6"});
    golden(o, "p=2/5", t25, 3, "11/2160", {"1/6", "3/4", "11/12"});
    golden(o, "p=2/5", t25, 4, "1/432", {"1/12", "1/4", "3/4", "11/12"});
    golden(o, "p=1/1000", t1000, 1, "0.00970326", {"1249/1500"});
    golden(o, "p=1/1000", t1000, 2, "0.0026610135", {"0.74824116", "0.91608039"});
    golden(o, "p=1/1000", t1000, 3, "0.00134412", {"0.719398", "0.831639", "0.94388"});
    golden(o, "p=1/1000", t1000, 4, "0.00087869", {"0.704407", "0.788862", "0.873317", "0.957772"});
    golden(o, "p=1/1000", t1000, 5, "0.000587384", {"1/6", "17/24", "19/24", "7/8", "23/24"});
    golden(o, "sevenths p=51/500", preset("gapped-sevenths-p", 51.0 / 500), 2, "0.0179722",
           {"0.488570", "0.829523"});
    golden(o, "sevenths p=225/500", preset("gapped-sevenths-p", 225.0 / 500), 3, "0.00985931",
           {"0.174089", "0.522267", "0.840756"});
}

void sequence(Outcome& o, const std::string& label, int first, const std::vector<int>& expected,
              const std::function<int(int)>& f) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const int n = first + int(i);
        const int got = f(n);
        if (got != expected[i]) {
            o.expect(false, label + " at n=" + std::to_string(n) + ": expected " + std::to_string(expected[i]) +
                                ", got " + std::to_string(got));
            return;
        }
    }
    o.expect(true, label);
}

void c2_sequences(Outcome& o) {
    sequence(o, "a(n)", 1,
             {0, 1, 1, 1, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 7, 8, 8, 8, 9,
              9, 9, 10, 10, 11, 11, 11, 12, 12, 12, 13, 13, 14, 14, 14, 15, 15, 16, 16, 16, 17, 17, 17},
             seed_sequence_a);
    sequence(o, "b(n)", 1,
             {1, 1, 2, 2, 3, 4, 4, 5, 5, 6, 6, 7, 8, 8, 9, 9, 10, 10, 11, 12,
              12, 13, 13, 14, 14, 15, 16, 16, 17, 17, 18, 18, 19, 20, 20, 21, 21, 22, 22, 23},
             seed_sequence_b);

    const auto t100 = preset("gapped-thirds-p", 0.01);
    const auto t25 = preset("gapped-thirds-p", 0.4);
    const auto t1000 = preset("gapped-thirds-p", 0.001);
    auto f = [](const MixedUniform& mu) { return [&mu](int n) { return f_of_n(mu, n); }; };
    sequence(o, "f p=1/100", 3,
             {1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6,
              6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10, 11},
             f(t100));
    sequence(o, "f p=1/100 tail", 4985,
             {886, 886, 886, 887, 887, 887, 887, 887, 887, 888, 888, 888, 888, 888,
              889, 889, 889, 889, 889, 889, 890, 890, 890, 890, 890, 890, 891},
             f(t100));
    sequence(o, "f p=2/5", 2,
             {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13, 14, 14},
             f(t25));
    sequence(o, "f p=2/5 tail", 4985,
             {2324, 2325, 2325, 2326, 2326, 2327, 2327, 2328, 2328, 2329, 2329, 2329, 2330, 2330,
              2331, 2331, 2332, 2332, 2333, 2333, 2334, 2334, 2335, 2335, 2336, 2336, 2336},
             f(t25));
    sequence(o, "f p=1/1000", 5,
             {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
              3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6},
             f(t1000));
    sequence(o, "f p=1/1000 tail", 4985,
             {453, 453, 454, 454, 454, 454, 454, 454, 454, 454, 454, 454, 454, 455,
              455, 455, 455, 455, 455, 455, 455, 455, 455, 455, 456, 456, 456},
             f(t1000));
}

void c3_endpoints(Outcome& o) {
    const auto c5 = preset("connected-p", 0.2);
    const auto c3 = preset("connected-p", 1.0 / 3);
    for (auto [n, k] : {std::pair{30, 11}, {51, 19}, {1000, 386}}) {
        const int got = neighbor_descent(c5, n).allocation.k;
        o.expect(got == k, "p=1/5 n=" + std::to_string(n) + ": k=" + std::to_string(got));
    }
    for (auto [n, m] : {std::pair{21, 12}, {100, 56}, {500, 279}}) {
        const int got = neighbor_descent(c3, n).allocation.m;
        o.expect(got == m, "p=1/3 n=" + std::to_string(n) + ": m=" + std::to_string(got));
    }
}

void c4_oracle(Outcome& o) {
    for (const auto& m : testing::reference_measures()) {
        const auto mu = testing::build(m);
        std::vector<std::vector<double>> profiles;
        for (int M : {1000, 10000, 100000}) profiles.push_back(dp_error_profile(discretize(mu, M), 10));
        for (int n = 1; n <= 10; ++n) {
            const double v = solve(mu, n).distortion;
            double gaps[3];
            for (int l = 0; l < 3; ++l) gaps[l] = std::abs(profiles[l][n - 1] - v) / v;
            const std::string at = std::string(m.label) + " n=" + std::to_string(n);
            o.expect(gaps[2] <= 5e-4, at + ": gap " + fmt(gaps[2]) + " at M=1e5");
            o.expect(gaps[0] > gaps[1] && gaps[1] > gaps[2],
                     at + ": gaps " + fmt(gaps[0]) + ", " + fmt(gaps[1]) + ", " + fmt(gaps[2]) + " not decreasing");
        }
    }
}

void c5_properties(Outcome& o) {
    // Centroid condition, strict decrease and n^2 V_n bounds on every preset.
    for (const auto& m : testing::reference_measures()) {
        const auto mu = testing::build(m);
        const double limit = high_resolution_limit(mu);
        double prev = INFINITY, worst_ratio = 0;
        bool centroid = true, decreasing = true;
        for (int n = 1; n <= 50; ++n) {
            const auto r = solve(mu, n);
            centroid = centroid && centroid_residual(mu, r.points) <= 1e-10;
            decreasing = decreasing && r.distortion < prev;
            prev = r.distortion;
            if (n >= 10) worst_ratio = std::max(worst_ratio, std::abs(n * double(n) * r.distortion / limit - 1));
        }
        o.expect(centroid, std::string(m.label) + ": centroid condition");
        o.expect(decreasing, std::string(m.label) + ": V_n not strictly decreasing");
        o.expect(worst_ratio <= 0.5, std::string(m.label) + ": n^2 V_n / limit off by " + fmt(worst_ratio));
    }

    // Affine equivariance.
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> sc(0.1, 5.0), sh(-10.0, 10.0);
    for (const auto& m : testing::reference_measures()) {
        const auto mu = testing::build(m);
        const double s = sc(rng), c = sh(rng);
        const auto image = affine_image(mu, s, c);
        bool ok = true;
        for (int n = 1; n <= 12; ++n) {
            const auto a = solve(mu, n);
            const auto b = solve(image, n);
            ok = ok && a.points.size() == b.points.size() &&
                 std::abs(b.distortion - s * s * a.distortion) <= 1e-10 * s * s * a.distortion;
            for (std::size_t i = 0; ok && i < a.points.size(); ++i)
                ok = std::abs(b.points[i] - (s * a.points[i] + c)) <= 1e-10 * s;
        }
        o.expect(ok, std::string(m.label) + ": affine equivariance");
    }

    // Descent equals the exhaustive scan, and allocations grow one point at a time.
    for (const auto& m : testing::reference_measures()) {
        const auto mu = testing::build(m);
        int mismatch = 0;
        for (int n = 2; n <= 300; ++n) {
            const auto d = neighbor_descent(mu, n);
            const auto a = argmin_allocation(mu, n);
            if (!(d.allocation == a.allocation) || std::abs(d.distortion - a.distortion) > 1e-12) mismatch = n;
        }
        o.expect(mismatch == 0, std::string(m.label) + ": descent differs from argmin at n=" + std::to_string(mismatch));

        int jump = 0, prev = solve(mu, 2).allocation.k;
        for (int n = 3; n <= 201; ++n) {
            const int k = solve(mu, n).allocation.k;
            if (k != prev && k != prev + 1) jump = n;
            prev = k;
        }
        o.expect(jump == 0, std::string(m.label) + ": k(n) jumps at n=" + std::to_string(jump));
    }

    // Randomised small-n differential test against the DP oracle.
    std::mt19937_64 rng2(52);
    std::uniform_int_distribution<int> nd(1, 4);
    for (int t = 0; t < 200; ++t) {
        const auto mu = testing::random_two_segment(rng2);
        const int n = nd(rng2);
        const auto s = solve_small_n(mu, n);
        const auto dp = dp_optimal_quantizer(discretize(mu, 100000), n);
        const double gap = std::abs(dp.error - s.distortion) / s.distortion;
        o.expect(gap <= 5e-4 && centroid_residual(mu, s.points) <= 1e-10,
                 "random instance " + std::to_string(t) + " n=" + std::to_string(n) + ": gap " + fmt(gap));
    }
}

// Parses the gap_point column of `probe-gap` output for one (p, n) row.
std::string probe(const std::string& intervals, const std::string& p, int n) {
    std::ostringstream out, err;
    const int code = cli::run({"probe-gap", "--intervals", intervals, "--p-range", p, "--n-range", std::to_string(n)},
                              out, err);
    if (code != 0) return "error";
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    const auto c = line.find(',', b + 1);
    return line.substr(b + 1, c - b - 1) + " " + line.substr(c + 1, line.find(',', c + 1) - c - 1);
}

void c6_gap_probe(Outcome& o) {
    auto r = probe("0,7/15,8/15,1", "51/500", 2);
    o.expect(r.rfind("true", 0) == 0, "sevenths p=51/500 n=2: " + r);
    r = probe("0,7/15,8/15,1", "225/500", 3);
    o.expect(r.rfind("true", 0) == 0, "sevenths p=225/500 n=3: " + r);
    // The one-mean of p=2/5 is the mean 17/30, inside the gap by construction, so
    // gap exclusion is probed from n = 2.
    for (const char* p : {"1/100", "2/5", "1/1000"})
        for (int n = 2; n <= 10; ++n) {
            r = probe("0,1/3,2/3,1", p, n);
            o.expect(r.rfind("false", 0) == 0, std::string("thirds p=") + p + " n=" + std::to_string(n) + ": " + r);
        }
}

}  // namespace

int main() {
    bool ok = true;
    ok &= criterion(1, "golden values", 10, c1_golden);
    ok &= criterion(2, "sequences a(n), b(n), f(n)", 5, c2_sequences);
    ok &= criterion(3, "neighbor descent endpoints", 0, c3_endpoints);
    ok &= criterion(4, "oracle equivalence, n = 1..10, M = 1e3/1e4/1e5", 300, c4_oracle);
    ok &= criterion(5, "property suite", 0, c5_properties);
    ok &= criterion(6, "gap probe", 0, c6_gap_probe);
    std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
    return ok ? 0 : 1;
}
