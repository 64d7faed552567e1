#include "mixquant/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mixquant/error.hpp"

namespace mixquant {

DiscreteMeasure discretize(const MixedUniform& mu, int M) {
    if (M < 1) throw Error(ErrorKind::Range, "discretize needs M >= 1");
    const std::size_t S = mu.size();
    std::vector<long> counts(S);
    std::vector<double> remainder(S);
    long total = 0;
    for (std::size_t s = 0; s < S; ++s) {
        const double exact = double(M) * mu[s].weight;
        counts[s] = std::max(1L, std::lround(exact));
        remainder[s] = exact - double(counts[s]);
        total += counts[s];
    }
    // Largest remainder first; ties go to the earlier segment.
    std::vector<std::size_t> order(S);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t t = 0; total < M; t = (t + 1) % S, ++total) ++counts[order[t]];

    DiscreteMeasure dm;
    dm.positions.reserve(static_cast<std::size_t>(total));
    dm.weights.reserve(static_cast<std::size_t>(total));
    for (std::size_t s = 0; s < S; ++s) {
        const double h = mu[s].length() / double(counts[s]);
        for (long a = 0; a < counts[s]; ++a) {
            dm.positions.push_back(mu[s].lo + (double(a) + 0.5) * h);
            dm.weights.push_back(mu[s].weight / double(counts[s]));
        }
    }
    const double w = std::accumulate(dm.weights.begin(), dm.weights.end(), 0.0);
    for (auto& x : dm.weights) x /= w;
    return dm;
}

DiscreteMeasure make_discrete(std::vector<double> positions, std::vector<double> weights) {
    if (positions.size() != weights.size() || positions.empty())
        throw Error(ErrorKind::Range, "positions and weights must be nonempty and of equal length");
    std::vector<std::size_t> order(positions.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return positions[a] < positions[b]; });
    DiscreteMeasure dm;
    for (auto i : order) {
        if (!(weights[i] > 0.0)) throw Error(ErrorKind::Weight, "atom weights must be positive");
        if (!dm.positions.empty() && !(positions[i] > dm.positions.back()))
            throw Error(ErrorKind::Degenerate, "atom positions must be distinct");
        dm.positions.push_back(positions[i]);
        dm.weights.push_back(weights[i]);
    }
    const double w = std::accumulate(dm.weights.begin(), dm.weights.end(), 0.0);
    if (std::abs(w - 1.0) > 1e-9) throw Error(ErrorKind::Weight, "atom weights must sum to 1");
    return dm;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Prefix sums of w, w*x, w*x^2 with x centred on the overall mean for accuracy.
class ClusterCost {
public:
    explicit ClusterCost(const DiscreteMeasure& dm) {
        const std::size_t A = dm.positions.size();
        double centre = 0.0;
        for (std::size_t a = 0; a < A; ++a) centre += dm.weights[a] * dm.positions[a];
        centre_ = centre;
        W_.assign(A + 1, 0.0);
        S_.assign(A + 1, 0.0);
        Q_.assign(A + 1, 0.0);
        for (std::size_t a = 0; a < A; ++a) {
            const double x = dm.positions[a] - centre;
            W_[a + 1] = W_[a] + dm.weights[a];
            S_[a + 1] = S_[a] + dm.weights[a] * x;
            Q_[a + 1] = Q_[a] + dm.weights[a] * x * x;
        }
    }

    // Atoms [i, j).
    double operator()(std::size_t i, std::size_t j) const {
        const double m = W_[j] - W_[i];
        const double s = S_[j] - S_[i];
        return std::max(0.0, Q_[j] - Q_[i] - s * s / m);
    }

    double centroid(std::size_t i, std::size_t j) const {
        return centre_ + (S_[j] - S_[i]) / (W_[j] - W_[i]);
    }

private:
    double centre_ = 0.0;
    std::vector<double> W_, S_, Q_;
};

// One DP layer: cur[j] = min over i < j of prev[i] + cost(i, j), with argmin.
void layer_quadratic(const ClusterCost& cost, const std::vector<double>& prev, std::vector<double>& cur,
                     std::vector<std::size_t>& arg, std::size_t first) {
    const std::size_t A = prev.size() - 1;
    for (std::size_t j = first; j <= A; ++j) {
        for (std::size_t i = first - 1; i < j; ++i) {
            const double v = prev[i] + cost(i, j);
            if (v < cur[j]) {
                cur[j] = v;
                arg[j] = i;
            }
        }
    }
}

void layer_dc(const ClusterCost& cost, const std::vector<double>& prev, std::vector<double>& cur,
              std::vector<std::size_t>& arg, std::size_t lo, std::size_t hi, std::size_t olo,
              std::size_t ohi) {
    if (lo > hi) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t top = std::min(mid - 1, ohi);
    for (std::size_t i = olo; i <= top; ++i) {
        const double v = prev[i] + cost(i, mid);
        if (v < cur[mid]) {
            cur[mid] = v;
            arg[mid] = i;
        }
    }
    if (mid > lo) layer_dc(cost, prev, cur, arg, lo, mid - 1, olo, arg[mid]);
    layer_dc(cost, prev, cur, arg, mid + 1, hi, arg[mid], ohi);
}

struct DpTables {
    std::vector<double> profile;                 // optimal error with 1..layers points
    std::vector<std::vector<std::size_t>> args;  // args[l][j]: start of the last cluster
};

DpTables run_dp(const ClusterCost& cost, std::size_t A, int layers, DpMethod method) {
    DpTables t;
    std::vector<double> prev(A + 1, kInf);
    prev[0] = 0.0;
    for (std::size_t j = 1; j <= A; ++j) prev[j] = cost(0, j);
    t.profile.push_back(prev[A]);
    t.args.emplace_back(A + 1, 0);
    for (int l = 2; l <= layers; ++l) {
        const std::size_t first = static_cast<std::size_t>(l);
        std::vector<double> cur(A + 1, kInf);
        std::vector<std::size_t> arg(A + 1, 0);
        if (method == DpMethod::Quadratic)
            layer_quadratic(cost, prev, cur, arg, first);
        else
            layer_dc(cost, prev, cur, arg, first, A, first - 1, A - 1);
        t.profile.push_back(cur[A]);
        t.args.push_back(std::move(arg));
        prev = std::move(cur);
    }
    return t;
}

}  // namespace

std::vector<double> dp_error_profile(const DiscreteMeasure& dm, int n, DpMethod method) {
    if (n < 1) throw Error(ErrorKind::Range, "n must be at least 1");
    const std::size_t A = dm.positions.size();
    const int layers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), A));
    auto profile = run_dp(ClusterCost(dm), A, layers, method).profile;
    profile.resize(static_cast<std::size_t>(n), 0.0);
    return profile;
}

OracleResult dp_optimal_quantizer(const DiscreteMeasure& dm, int n, DpMethod method) {
    if (n < 1) throw Error(ErrorKind::Range, "n must be at least 1");
    const std::size_t A = dm.positions.size();
    OracleResult r;
    if (static_cast<std::size_t>(n) >= A) {
        r.points = dm.positions;
        return r;
    }
    const ClusterCost cost(dm);
    const auto t = run_dp(cost, A, n, method);
    r.error = t.profile.back();
    std::size_t j = A;
    for (int l = n; l >= 1; --l) {
        const std::size_t i = l == 1 ? 0 : t.args[static_cast<std::size_t>(l - 1)][j];
        r.points.push_back(cost.centroid(i, j));
        j = i;
    }
    std::reverse(r.points.begin(), r.points.end());
    return r;
}

OracleResult lloyd(const MixedUniform& mu, std::span<const double> init) {
    if (init.empty()) throw Error(ErrorKind::Range, "lloyd needs at least one initial point");
    for (std::size_t i = 0; i < init.size(); ++i) {
        if (init[i] < mu.support_lo() || init[i] > mu.support_hi())
            throw Error(ErrorKind::Range, "initial points must lie in the support hull");
        if (i > 0 && !(init[i] > init[i - 1]))
            throw Error(ErrorKind::Range, "initial points must be sorted and distinct");
    }
    std::vector<double> pts(init.begin(), init.end());
    OracleResult r;
    double move = kInf;
    constexpr int kMaxSweeps = 10000;
    while (r.iterations < kMaxSweeps && !(move < 1e-13)) {
        const auto bounds = voronoi_boundaries(pts);
        move = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double lo = i == 0 ? mu.support_lo() : bounds[i - 1];
            const double hi = i + 1 == pts.size() ? mu.support_hi() : bounds[i];
            if (!(mu.mass(lo, hi) > 0.0))
                throw Error(ErrorKind::EmptyCell,
                            "cell " + std::to_string(i) + " of the current iterate carries no mass");
            const double c = conditional_mean(mu, lo, hi);
            move = std::max(move, std::abs(c - pts[i]));
            pts[i] = c;
        }
        ++r.iterations;
    }
    if (move > 1e-10)
        throw Error(ErrorKind::NoConvergence,
                    "lloyd still moving by " + std::to_string(move) + " after " + std::to_string(kMaxSweeps) +
                        " sweeps");
    r.points = std::move(pts);
    r.error = distortion(mu, r.points);
    return r;
}

}  // namespace mixquant
