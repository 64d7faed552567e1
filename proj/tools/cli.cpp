#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "golden.hpp"
#include "mixquant/allocsearch.hpp"
#include "mixquant/casesolver.hpp"
#include "mixquant/distribution_file.hpp"
#include "mixquant/error.hpp"
#include "mixquant/oracle.hpp"
#include "mixquant/presets.hpp"

namespace mixquant::cli {

double parse_number(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            const double v = std::stod(text, &used);
            if (used == text.size()) return v;
        } else {
            const std::string a = text.substr(0, slash);
            const std::string b = text.substr(slash + 1);
            std::size_t ua = 0, ub = 0;
            const double num = std::stod(a, &ua);
            const double den = std::stod(b, &ub);
            if (ua == a.size() && ub == b.size() && den != 0.0) return num / den;
        }
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorKind::Parse, "cannot read number '" + text + "'");
}

std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos; start = pos + 1)
        parts.push_back(text.substr(start, pos - start));
    parts.push_back(text.substr(start));
    if (parts.size() > 3) throw Error(ErrorKind::Parse, "range '" + text + "' has too many fields");

    const double lo = parse_number(parts[0]);
    if (parts.size() == 1) return {lo};
    const double hi = parse_number(parts[1]);
    const double step = parts.size() == 3 ? parse_number(parts[2]) : 1.0;
    if (!(step > 0.0) || hi < lo) throw Error(ErrorKind::Parse, "range '" + text + "' is empty");
    const long count = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v;
    for (long i = 0; i < count; ++i) v.push_back(lo + double(i) * step);
    return v;
}

namespace {

struct NamedMeasure {
    std::string label;
    double p = 0.0;
    MixedUniform mu;
};

std::vector<int> int_range(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_range(text)) {
        if (v != std::floor(v) || v < 1) throw Error(ErrorKind::Parse, "n range '" + text + "' needs positive integers");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

NamedMeasure preset_measure(const std::vector<std::string>& preset) {
    const double p = parse_number(preset.at(1));
    return {preset[0], p, make_preset(preset[0], p)};
}

std::vector<NamedMeasure> reference_measures() {
    std::vector<NamedMeasure> v;
    for (auto [name, p] : std::initializer_list<std::pair<const char*, double>>{
             {"connected-p", 0.2},
             {"connected-p", 1.0 / 3.0},
             {"gapped-thirds-p", 0.01},
             {"gapped-thirds-p", 0.4},
             {"gapped-thirds-p", 0.001},
             {"gapped-sevenths-p", 51.0 / 500.0},
             {"gapped-sevenths-p", 225.0 / 500.0}})
        v.push_back({name, p, make_preset(name, p)});
    return v;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoConvergence:
        case ErrorKind::Infeasible:
        case ErrorKind::Cap:
        case ErrorKind::EmptyCell:
        case ErrorKind::ZeroMass: return 3;
        default: return 2;
    }
}

nlohmann::json json_list(const std::vector<double>& v) {
    auto a = nlohmann::json::array();
    for (double x : v) a.push_back(round12(x));
    return a;
}

// solve

struct SolveOptions {
    std::vector<std::string> preset;
    std::string spec;
    int n = 0;
    std::string format = "json";
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    const MixedUniform mu = o.spec.empty() ? preset_measure(o.preset).mu : load_distribution(o.spec);
    const auto r = solve(mu, o.n);
    const auto bounds = voronoi_boundaries(r.points);
    if (o.format == "csv") {
        out << "n,k,case,distortion,points,boundaries\n";
        out << r.n << ',' << r.allocation.k << ',' << to_string(r.tag) << ',' << fmt12(r.distortion) << ','
            << fmt12_list(r.points, ";") << ',' << fmt12_list(bounds, ";") << '\n';
        return 0;
    }
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.allocation.k;
    j["case"] = std::string(to_string(r.tag));
    j["points"] = json_list(r.points);
    j["boundaries"] = json_list(bounds);
    j["distortion"] = round12(r.distortion);
    out << j.dump() << '\n';
    return 0;
}

// reproduce

int cmd_reproduce(const std::vector<std::string>& only, std::ostream& out) {
    const auto& groups = only.empty() ? golden_groups() : only;
    std::vector<GoldenRow> rows;
    for (const auto& g : groups) {
        auto part = golden_rows(g);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    std::size_t failed = 0;
    for (const auto& r : rows) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.group << "  " << r.name << "\n"
            << "      expected " << r.expected << "\n"
            << "      actual   " << r.actual << "\n"
            << "      deviation " << fmt12(r.deviation) << "  tolerance " << fmt12(r.tolerance) << "\n";
        failed += r.pass ? 0 : 1;
    }
    out << rows.size() << " rows, " << rows.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

// sweep

int cmd_sweep(const std::string& preset, const std::string& p_range, const std::string& n_range,
              std::ostream& out) {
    const auto ps = parse_range(p_range);
    const auto ns = int_range(n_range);
    out << "preset,p,n,k,m,case,gap_points,distortion\n";
    for (double p : ps) {
        const auto mu = make_preset(preset, p);
        for (int n : ns) {
            const auto r = solve(mu, n);
            out << preset << ',' << fmt12(p) << ',' << n << ',' << r.allocation.k << ',' << r.allocation.m << ','
                << to_string(r.tag) << ',' << r.gap_points << ',' << fmt12(r.distortion) << '\n';
        }
    }
    return 0;
}

// probe-gap

int cmd_probe_gap(const std::string& intervals, const std::string& p_range, const std::string& n_range,
                  std::ostream& out) {
    std::vector<double> e;
    std::size_t start = 0;
    for (std::size_t pos; (pos = intervals.find(',', start)) != std::string::npos; start = pos + 1)
        e.push_back(parse_number(intervals.substr(start, pos - start)));
    e.push_back(parse_number(intervals.substr(start)));
    if (e.size() != 4) throw Error(ErrorKind::Parse, "--intervals takes lo1,hi1,lo2,hi2");

    out << "p,n,gap_point,gap_positions,distortion\n";
    for (double p : parse_range(p_range)) {
        const auto mu = make_mixed_uniform({{e[0], e[1], p}, {e[2], e[3], 1.0 - p}});
        for (int n : int_range(n_range)) {
            const auto s = n <= 4 ? solve_small_n(mu, n) : solve_exhaustive(mu, n);
            std::vector<double> inside;
            for (double x : s.points)
                if (x > e[1] && x < e[2]) inside.push_back(x);
            out << fmt12(p) << ',' << n << ',' << (inside.empty() ? "false" : "true") << ','
                << fmt12_list(inside, ";") << ',' << fmt12(s.distortion) << '\n';
        }
    }
    return 0;
}

// oracle-check

int default_oracle_m() {
    if (const char* env = std::getenv("MIXQUANT_ORACLE_M")) {
        const double v = parse_number(env);
        if (v >= 1 && v == std::floor(v)) return static_cast<int>(v);
        throw Error(ErrorKind::Parse, "MIXQUANT_ORACLE_M must be a positive integer");
    }
    return 100000;
}

int cmd_oracle_check(const std::vector<std::string>& preset, const std::string& n_range, int M, bool refinement,
                     std::ostream& out) {
    constexpr double kTolerance = 5e-4;
    const auto measures = preset.empty() ? reference_measures() : std::vector<NamedMeasure>{preset_measure(preset)};
    const auto ns = int_range(n_range);
    const int n_max = *std::max_element(ns.begin(), ns.end());
    std::vector<int> levels;
    if (refinement)
        for (int m : {1000, 10000})
            if (m < M) levels.push_back(m);
    levels.push_back(M);

    bool ok = true;
    out << "preset,p,n,solver,M,oracle,rel_gap,status\n";
    for (const auto& m : measures) {
        std::vector<std::vector<double>> profiles;
        for (int level : levels) profiles.push_back(dp_error_profile(discretize(m.mu, level), n_max));
        for (int n : ns) {
            const double v = solve(m.mu, n).distortion;
            double previous = INFINITY;
            for (std::size_t l = 0; l < levels.size(); ++l) {
                const double dp = profiles[l][static_cast<std::size_t>(n - 1)];
                const double gap = std::abs(dp - v) / v;
                const bool final_level = l + 1 == levels.size();
                bool pass = gap < previous;
                if (final_level) pass = pass && gap <= kTolerance;
                ok = ok && pass;
                previous = gap;
                out << m.label << ',' << fmt12(m.p) << ',' << n << ',' << fmt12(v) << ',' << levels[l] << ','
                    << fmt12(dp) << ',' << fmt12(gap) << ',' << (pass ? "ok" : "FAIL") << '\n';
            }
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal quantizers for mixtures of uniform distributions on segments", "mixquant"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "Optimal n-means of one measure");
    auto* preset_opt = solve_cmd->add_option("--preset", so.preset, "Preset name and left weight p")->expected(2);
    auto* spec_opt = solve_cmd->add_option("--spec", so.spec, "JSON distribution file");
    preset_opt->excludes(spec_opt);
    solve_cmd->add_option("--n", so.n, "Number of points")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--format", so.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> only;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Check every reference value");
    reproduce_cmd->add_option("--only", only, "Restrict to these groups")->check(CLI::IsMember(golden_groups()));

    std::string sweep_preset, sweep_p = "0.05:0.95:0.05", sweep_n = "1:10";
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV of V_n over a grid of p and n");
    sweep_cmd->add_option("--preset", sweep_preset, "Preset name")->required()->check(CLI::IsMember(preset_names()));
    sweep_cmd->add_option("--p-range", sweep_p, "lo:hi:step");
    sweep_cmd->add_option("--n-range", sweep_n, "lo:hi");

    std::string probe_intervals = "0,7/15,8/15,1", probe_p = "51/500", probe_n = "2:10";
    auto* probe_cmd = app.add_subcommand("probe-gap", "Report optimal points that fall between the segments");
    probe_cmd->add_option("--intervals", probe_intervals, "lo1,hi1,lo2,hi2");
    probe_cmd->add_option("--p-range", probe_p, "lo:hi:step");
    probe_cmd->add_option("--n-range", probe_n, "lo:hi");

    std::vector<std::string> oracle_preset;
    std::string oracle_n = "1:10";
    int oracle_m = 0;
    bool refinement = false;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare solver errors with the dynamic-programming oracle");
    oracle_cmd->add_option("--preset", oracle_preset, "Preset name and p (default: every tabulated measure)")
        ->expected(2);
    oracle_cmd->add_option("--n-range", oracle_n, "lo:hi");
    oracle_cmd->add_option("--M", oracle_m, "Atoms in the discretization (default MIXQUANT_ORACLE_M or 100000)")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--refinement", refinement, "Also run M = 1000 and 10000 and require shrinking gaps");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (solve_cmd->parsed()) {
            if (so.preset.empty() && so.spec.empty()) throw Error(ErrorKind::Parse, "solve needs --preset or --spec");
            return cmd_solve(so, out);
        }
        if (reproduce_cmd->parsed()) return cmd_reproduce(only, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_preset, sweep_p, sweep_n, out);
        if (probe_cmd->parsed()) return cmd_probe_gap(probe_intervals, probe_p, probe_n, out);
        if (oracle_cmd->parsed())
            return cmd_oracle_check(oracle_preset, oracle_n, oracle_m ? oracle_m : default_oracle_m(), refinement,
                                    out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return 2;
}

}  // namespace mixquant::cli
