#include "mixquant/allocsearch.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "mixquant/closedform.hpp"
#include "mixquant/error.hpp"

namespace mixquant {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SolveReport report_from(int n, const CaseSolution& s) {
    SolveReport r;
    r.n = n;
    r.allocation = s.allocation;
    r.tag = s.tag;
    r.points = s.points;
    r.distortion = s.distortion;
    r.gap_points = s.gap_points;
    return r;
}

// F(k) = best_split distortion, memoised; +inf where neither case is feasible.
class SplitCache {
public:
    SplitCache(const MixedUniform& mu, int n) : mu_(mu), n_(n) {}

    double F(int k) {
        const auto& s = at(k);
        return s ? s->distortion : kInf;
    }

    const std::optional<CaseSolution>& at(int k) {
        auto it = cache_.find(k);
        if (it == cache_.end()) {
            std::optional<CaseSolution> s;
            try {
                s = best_split(mu_, {k, n_ - k});
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Infeasible) throw;
            }
            it = cache_.emplace(k, std::move(s)).first;
        }
        return it->second;
    }

private:
    const MixedUniform& mu_;
    int n_;
    std::map<int, std::optional<CaseSolution>> cache_;
};

void require_n(const MixedUniform& mu, int n) {
    if (mu.size() != 2)
        throw Error(ErrorKind::Range, "expected a two-segment measure, got " + std::to_string(mu.size()));
    if (n < 2) throw Error(ErrorKind::Range, "allocation search needs n >= 2");
}

}  // namespace

SolveReport neighbor_descent(const MixedUniform& mu, int n) {
    require_n(mu, n);
    SplitCache cache(mu, n);
    const int seed = seed_allocation(mu, n);
    int k = seed;

    // An infeasible seed moves to the nearest feasible k, left first.
    if (!std::isfinite(cache.F(k))) {
        int found = 0;
        for (int d = 1; d < n && !found; ++d) {
            if (k - d >= 1 && std::isfinite(cache.F(k - d))) found = k - d;
            else if (k + d <= n - 1 && std::isfinite(cache.F(k + d))) found = k + d;
        }
        if (!found) throw Error(ErrorKind::Infeasible, "no feasible allocation for n=" + std::to_string(n));
        k = found;
    }

    int steps = 0;
    for (;;) {
        const double here = cache.F(k);
        const double down = k > 1 ? here - cache.F(k - 1) : -kInf;
        const double up = k < n - 1 ? here - cache.F(k + 1) : -kInf;
        if (!(down > 0.0) && !(up > 0.0)) break;
        k += (down >= up) ? -1 : 1;
        ++steps;
    }

    auto r = report_from(n, *cache.at(k));
    r.descent_steps = steps;
    r.seed_k = seed;
    return r;
}

SolveReport argmin_allocation(const MixedUniform& mu, int n, int cap) {
    require_n(mu, n);
    if (n > cap)
        throw Error(ErrorKind::Cap, "n=" + std::to_string(n) + " exceeds scan cap " + std::to_string(cap));

    if (is_gapped(mu) && n >= split_threshold(mu)) {
        const int k = f_of_n(mu, n);
        const auto s = split_quantizer(mu, n, k);
        SolveReport r;
        r.n = n;
        r.allocation = s.allocation;
        r.tag = CaseTag::V1;  // best_split reports this tie as V1 as well
        r.points = s.points;
        r.distortion = distortion(mu, s.points);
        r.seed_k = k;
        return r;
    }

    std::optional<CaseSolution> best;
    for (int k = 1; k <= n - 1; ++k) {
        try {
            auto s = best_split(mu, {k, n - k});
            if (!best || s.distortion < best->distortion) best = std::move(s);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Infeasible) throw;
        }
    }
    if (!best) throw Error(ErrorKind::Infeasible, "no feasible allocation for n=" + std::to_string(n));
    auto r = report_from(n, *best);
    r.seed_k = best->allocation.k;
    return r;
}

SolveReport solve(const MixedUniform& mu, int n) {
    if (n < 1) throw Error(ErrorKind::Range, "n must be at least 1");
    if (n == 1 || (is_gapped(mu) && (n <= 4 || n < split_threshold(mu)))) {
        auto s = n <= 4 ? solve_small_n(mu, n) : solve_exhaustive(mu, n);
        auto r = report_from(n, s);
        r.seed_k = s.allocation.k;
        return r;
    }
    return neighbor_descent(mu, n);
}

}  // namespace mixquant
