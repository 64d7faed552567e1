#include "golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "format.hpp"
#include "mixquant/allocsearch.hpp"
#include "mixquant/closedform.hpp"
#include "mixquant/error.hpp"
#include "mixquant/presets.hpp"

namespace mixquant::cli {

Reference parse_reference(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double num = std::stod(text.substr(0, slash));
        const double den = std::stod(text.substr(slash + 1));
        return {num / den, 1e-12};
    }
    const auto dot = text.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    return {std::stod(text), std::max(5e-7, 0.5 * std::pow(10.0, -decimals))};
}

namespace {

using Rows = std::vector<GoldenRow>;

std::string join(const std::vector<std::string>& parts) {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s + "}";
}

GoldenRow scalar(const std::string& group, const std::string& name, const std::string& expected,
                 double actual) {
    const auto ref = parse_reference(expected);
    GoldenRow r{group, name, expected, fmt12(actual), ref.tolerance, std::abs(actual - ref.value), false};
    r.pass = r.deviation <= r.tolerance;
    return r;
}

GoldenRow point_set(const std::string& group, const std::string& name,
                    const std::vector<std::string>& expected, const std::vector<double>& actual) {
    GoldenRow r{group, name, join(expected), fmt12_list(actual), 0.0, 0.0, true};
    if (expected.size() != actual.size()) {
        r.deviation = INFINITY;
        r.pass = false;
        return r;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto ref = parse_reference(expected[i]);
        const double d = std::abs(actual[i] - ref.value);
        r.tolerance = std::max(r.tolerance, ref.tolerance);
        r.deviation = std::max(r.deviation, d);
        if (d > ref.tolerance) r.pass = false;
    }
    return r;
}

GoldenRow integers(const std::string& group, const std::string& name, const std::vector<int>& expected,
                   const std::vector<int>& actual) {
    auto text = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return v.size() > 8 ? std::to_string(v.size()) + " terms" : s;
    };
    const bool same = expected == actual;
    GoldenRow r{group, name, text(expected), same ? text(actual) : "mismatch", 0.0, same ? 0.0 : 1.0, same};
    if (!same) {
        for (std::size_t i = 0; i < std::min(expected.size(), actual.size()); ++i) {
            if (expected[i] != actual[i]) {
                r.actual = "first mismatch at term " + std::to_string(i + 1) + ": " + std::to_string(actual[i]);
                break;
            }
        }
    }
    return r;
}

// V_n and optimal set rows for one measure.
void optimum(Rows& rows, const std::string& group, const std::string& label, const MixedUniform& mu, int n,
             const std::string& V, const std::vector<std::string>& set) {
    const auto r = solve(mu, n);
    const std::string tag = label + " n=" + std::to_string(n);
    rows.push_back(scalar(group, tag + " V", V, r.distortion));
    rows.push_back(point_set(group, tag + " set", set, r.points));
}

Rows moments() {
    Rows rows;
    const auto c5 = make_preset("connected-p", 0.2);
    const auto c3 = make_preset("connected-p", 1.0 / 3.0);
    const auto t100 = make_preset("gapped-thirds-p", 0.01);
    const auto t25 = make_preset("gapped-thirds-p", 0.4);
    rows.push_back(scalar("moments", "connected p=1/5 mean", "13/10", mean(c5)));
    rows.push_back(scalar("moments", "connected p=1/5 variance", "73/300", variance(c5)));
    rows.push_back(scalar("moments", "connected p=1/3 mean", "7/6", mean(c3)));
    rows.push_back(scalar("moments", "connected p=1/3 variance", "11/36", variance(c3)));
    rows.push_back(scalar("moments", "thirds p=1/100 mean", "62/75", mean(t100)));
    rows.push_back(scalar("moments", "thirds p=1/100 variance", "461/33750", variance(t100)));
    rows.push_back(scalar("moments", "thirds p=2/5 variance", "313/2700", variance(t25)));
    return rows;
}

Rows two_means() {
    Rows rows;
    optimum(rows, "two-means", "connected p=1/5", make_preset("connected-p", 0.2), 2, "317/3840",
            {"11/16", "25/16"});
    optimum(rows, "two-means", "connected p=1/3", make_preset("connected-p", 1.0 / 3.0), 2, "1/12",
            {"1/2", "3/2"});
    optimum(rows, "two-means", "thirds p=1/100", make_preset("gapped-thirds-p", 0.01), 2, "0.005682",
            {"0.731517", "0.910506"});
    return rows;
}

Rows three_means() {
    Rows rows;
    optimum(rows, "three-means", "connected p=1/5", make_preset("connected-p", 0.2), 3, "0.0295695",
            {"0.400679", "1.202036", "1.734012"});
    optimum(rows, "three-means", "connected p=1/3", make_preset("connected-p", 1.0 / 3.0), 3, "0.0343006",
            {"0.380129", "1.14039", "1.71346"});
    optimum(rows, "three-means", "thirds p=1/100", make_preset("gapped-thirds-p", 0.01), 3, "103/43200",
            {"1/6", "3/4", "11/12"});
    return rows;
}

Rows gapped() {
    Rows rows;
    const auto t25 = make_preset("gapped-thirds-p", 0.4);
    optimum(rows, "gapped", "thirds p=2/5", t25, 1, "313/2700", {"17/30"});
    optimum(rows, "gapped", "thirds p=2/5", t25, 2, "1/108", {"1/6", "5/6"});
    optimum(rows, "gapped", "thirds p=2/5", t25, 3, "11/2160", {"1/6", "3/4", "11/12"});
    optimum(rows, "gapped", "thirds p=2/5", t25, 4, "1/432", {"1/12", "1/4", "3/4", "11/12"});
    const auto t1000 = make_preset("gapped-thirds-p", 0.001);
    optimum(rows, "gapped", "thirds p=1/1000", t1000, 1, "0.00970326", {"1249/1500"});
    optimum(rows, "gapped", "thirds p=1/1000", t1000, 2, "0.0026610135", {"0.74824116", "0.91608039"});
    optimum(rows, "gapped", "thirds p=1/1000", t1000, 3, "0.00134412", {"0.719398", "0.831639", "0.94388"});
    optimum(rows, "gapped", "thirds p=1/1000", t1000, 4, "0.00087869",
            {"0.704407", "0.788862", "0.873317", "0.957772"});
    optimum(rows, "gapped", "thirds p=1/1000", t1000, 5, "0.000587384",
            {"1/6", "17/24", "19/24", "7/8", "23/24"});
    return rows;
}

Rows sevenths() {
    Rows rows;
    optimum(rows, "sevenths", "sevenths p=51/500", make_preset("gapped-sevenths-p", 51.0 / 500.0), 2,
            "0.0179722", {"0.488570", "0.829523"});
    optimum(rows, "sevenths", "sevenths p=225/500", make_preset("gapped-sevenths-p", 225.0 / 500.0), 3,
            "0.00985931", {"0.174089", "0.522267", "0.840756"});
    return rows;
}

Rows split() {
    Rows rows;
    auto add = [&](const std::string& label, double p, int n, int k, const std::string& V,
                   const std::vector<std::string>& set) {
        const auto s = split_quantizer(make_preset("gapped-thirds-p", p), n, k);
        const std::string tag = label + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        rows.push_back(scalar("split", tag + " error", V, s.error));
        rows.push_back(point_set("split", tag + " points", set, s.points));
    };
    add("thirds p=1/100", 0.01, 3, 1, "103/43200", {"1/6", "3/4", "11/12"});
    add("thirds p=2/5", 0.4, 4, 2, "1/432", {"1/12", "1/4", "3/4", "11/12"});
    add("thirds p=1/1000", 0.001, 5, 1, "0.000587384", {"1/6", "17/24", "19/24", "7/8", "23/24"});
    const auto u = uniform_quantizer({2.0 / 3.0, 1.0, 0.99}, 1);
    rows.push_back(scalar("split", "uniform [2/3,1] weight 99/100 n=1 error", "11/1200", u.error));
    return rows;
}

std::vector<int> range_of(int first, int last, const std::function<int(int)>& f) {
    std::vector<int> v;
    for (int n = first; n <= last; ++n) v.push_back(f(n));
    return v;
}

Rows sequences_a() {
    const std::vector<int> a{0,  1,  1,  1,  2,  2,  3,  3,  3,  4,  4,  4,  5,  5,  6,  6,
                             6,  7,  7,  8,  8,  8,  9,  9,  9,  10, 10, 11, 11, 11, 12, 12,
                             12, 13, 13, 14, 14, 14, 15, 15, 16, 16, 16, 17, 17, 17};
    return {integers("sequences-a", "a(n), n=1..46", a, range_of(1, 46, seed_sequence_a))};
}

Rows sequences_b() {
    const std::vector<int> b{1,  1,  2,  2,  3,  4,  4,  5,  5,  6,  6,  7,  8,  8,  9,  9,  10, 10, 11, 12,
                             12, 13, 13, 14, 14, 15, 16, 16, 17, 17, 18, 18, 19, 20, 20, 21, 21, 22, 22, 23};
    return {integers("sequences-b", "b(n), n=1..40", b, range_of(1, 40, seed_sequence_b))};
}

Rows f_sequences() {
    Rows rows;
    auto add = [&](const std::string& label, double p, int first, const std::vector<int>& expected) {
        const auto mu = make_preset("gapped-thirds-p", p);
        const int last = first + static_cast<int>(expected.size()) - 1;
        rows.push_back(integers("f-sequences",
                                label + " f(n), n=" + std::to_string(first) + ".." + std::to_string(last), expected,
                                range_of(first, last, [&](int n) { return f_of_n(mu, n); })));
    };
    add("thirds p=1/100", 0.01, 3,
        {1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6,
         6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10, 11});
    add("thirds p=1/100", 0.01, 4985,
        {886, 886, 886, 887, 887, 887, 887, 887, 887, 888, 888, 888, 888, 888,
         889, 889, 889, 889, 889, 889, 890, 890, 890, 890, 890, 890, 891});
    add("thirds p=2/5", 0.4, 2,
        {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13, 14, 14});
    add("thirds p=2/5", 0.4, 4985,
        {2324, 2325, 2325, 2326, 2326, 2327, 2327, 2328, 2328, 2329, 2329, 2329, 2330, 2330,
         2331, 2331, 2332, 2332, 2333, 2333, 2334, 2334, 2335, 2335, 2336, 2336, 2336});
    add("thirds p=1/1000", 0.001, 5,
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
         3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6});
    add("thirds p=1/1000", 0.001, 4985,
        {453, 453, 454, 454, 454, 454, 454, 454, 454, 454, 454, 454, 454, 455,
         455, 455, 455, 455, 455, 455, 455, 455, 455, 455, 456, 456, 456});
    return rows;
}

Rows descent() {
    Rows rows;
    const auto c5 = make_preset("connected-p", 0.2);
    const auto c3 = make_preset("connected-p", 1.0 / 3.0);
    for (auto [n, k] : {std::pair{30, 11}, {51, 19}, {1000, 386}}) {
        const auto r = neighbor_descent(c5, n);
        rows.push_back(integers("descent", "connected p=1/5 n=" + std::to_string(n) + " k", {k}, {r.allocation.k}));
    }
    rows.push_back(integers("descent", "connected p=1/5 n=1000 seed a(n)", {381}, {seed_sequence_a(1000)}));
    for (auto [n, m] : {std::pair{21, 12}, {100, 56}, {500, 279}}) {
        const auto r = neighbor_descent(c3, n);
        rows.push_back(integers("descent", "connected p=1/3 n=" + std::to_string(n) + " m", {m}, {r.allocation.m}));
    }
    rows.push_back(integers("descent", "connected p=1/3 n=500 seed b(n)", {286}, {seed_sequence_b(500)}));
    return rows;
}

const std::map<std::string, std::function<Rows()>>& registry() {
    static const std::map<std::string, std::function<Rows()>> r{
        {"moments", moments},         {"two-means", two_means},     {"three-means", three_means},
        {"gapped", gapped},           {"sevenths", sevenths},       {"split", split},
        {"sequences-a", sequences_a}, {"sequences-b", sequences_b}, {"f-sequences", f_sequences},
        {"descent", descent},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& golden_groups() {
    static const std::vector<std::string> g{"moments", "two-means",   "three-means", "gapped",        "sevenths",
                                            "split",   "sequences-a", "sequences-b", "f-sequences", "descent"};
    return g;
}

std::vector<GoldenRow> golden_rows(const std::string& group) {
    const auto it = registry().find(group);
    if (it == registry().end()) throw Error(ErrorKind::Parse, "unknown reproduce group '" + group + "'");
    return it->second();
}

}  // namespace mixquant::cli
