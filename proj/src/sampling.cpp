#include "krect/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "krect/approx_count.hpp"
#include "krect/exact_min_area.hpp"

namespace krect {

namespace {

void check_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::invalid_argument("alpha must be a positive finite number");
}

double u01(std::mt19937_64& g) {
    // Bit-stable across standard libraries, unlike the distribution classes.
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

double rho_formula(int n, int kappa_a, double delta) {
    if (n == 1) return 1.0;  // ln 1 = 0 would exclude the only point
    return std::min(1.0, 72.0 / (kappa_a * delta * delta) * std::log(n));
}

SamplingPlan make_plan(int n, int kappa_a, double eps, double delta,
                       std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sampling plan: n must be >= 1");
    if (kappa_a < 1) throw std::invalid_argument("sampling plan: kappa_a must be >= 1");
    SamplingPlan plan;
    plan.n = n;
    plan.kappa_a = kappa_a;
    plan.eps = eps;
    plan.delta = delta;
    plan.rho = rho_formula(n, kappa_a, delta);
    plan.seed = seed;
    return plan;
}

}  // namespace

SamplingPlan SamplingPlan::for_algorithm(int n, int kappa_a, double eps,
                                         std::uint64_t seed) {
    if (!std::isfinite(eps) || eps <= 0.0 || eps > 0.5)
        throw std::invalid_argument("eps must lie in (0, 1/2]");
    return make_plan(n, kappa_a, eps, eps / 3.0, seed);
}

SamplingPlan SamplingPlan::direct(int n, int kappa_a, double eps,
                                  std::uint64_t seed) {
    if (!std::isfinite(eps) || eps <= 0.0)
        throw std::invalid_argument("eps must be positive");
    return make_plan(n, kappa_a, eps, eps, seed);
}

PointSet rho_sample(const PointSet& ps, const SamplingPlan& plan) {
    if (plan.rho >= 1.0) return ps;
    std::mt19937_64 g(plan.seed);
    std::vector<Point> kept;
    for (const Point& p : ps)
        if (u01(g) < plan.rho) kept.push_back(p);
    return PointSet{std::move(kept)};
}

AreaResult approx_max_points_os(const PointSet& ps, double alpha, double eps) {
    check_alpha(alpha);
    if (!std::isfinite(eps) || eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("eps must lie in (0, 1)");
    if (ps.empty()) throw std::invalid_argument("need at least one point");

    KappaResult ka = kappa(ps, alpha);
    const int n = static_cast<int>(ps.size());
    const int budget =
        static_cast<int>(std::min<long long>(4LL * ka.kappa, n));
    DCTree tree = preprocess(ps, budget);

    // Grid targets kappa_a (1 + i eps) up to 4 kappa_a, rounded up to the
    // next integer count. A few ulps are shaved before ceil so an exact
    // integer grid value is never inflated by product rounding.
    auto grid_target = [&](long long i) {
        double v = ka.kappa * (1.0 + static_cast<double>(i) * eps);
        return static_cast<long long>(std::ceil(v - 4.0 * v * 2.22e-16));
    };
    long long i_max = static_cast<long long>(std::floor(3.0 / eps + 1e-9));
    while (i_max > 0 && grid_target(i_max) > 4LL * ka.kappa) --i_max;

    auto probe = [&](long long i) -> AreaResult {
        long long kt = grid_target(i);
        if (kt > budget) return AreaResult{};
        return query_leq(tree, static_cast<int>(kt), alpha);
    };

    if (!probe(0).feasible()) {
        // Unreachable in exact arithmetic (the 4-approx witness has area
        // <= alpha and kappa_a points); kept as a safety net.
        return AreaResult{ka.witness.area(), ka.witness, count_in(ps, ka.witness)};
    }
    long long lo = 0, hi = i_max;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (probe(mid).feasible())
            lo = mid;
        else
            hi = mid - 1;
    }
    return probe(lo);
}

AreaResult approx_max_points(const PointSet& ps, double alpha, double eps,
                             std::uint64_t seed) {
    check_alpha(alpha);
    if (!std::isfinite(eps) || eps <= 0.0 || eps > 0.5)
        throw std::invalid_argument("eps must lie in (0, 1/2]");
    if (ps.empty()) throw std::invalid_argument("need at least one point");
    if (ps.size() == 1) {
        Rect r{ps[0].x, ps[0].x, ps[0].y, ps[0].y};
        return AreaResult{0.0, r, 1};
    }

    KappaResult ka = kappa(ps, alpha);
    SamplingPlan plan = SamplingPlan::for_algorithm(static_cast<int>(ps.size()),
                                                    ka.kappa, eps, seed);
    PointSet sample = rho_sample(ps, plan);

    AreaResult out;
    if (!sample.empty()) {
        AreaResult os = approx_max_points_os(sample, alpha, plan.delta);
        int full_count = count_in(ps, *os.rect);
        if (full_count >= ka.kappa)
            out = AreaResult{os.rect->area(), *os.rect, full_count};
    }
    if (!out.feasible()) {
        // Failed sampling event (or empty sample): fall back to the
        // deterministic 4-approximation witness, never anything worse.
        out = AreaResult{ka.witness.area(), ka.witness, count_in(ps, ka.witness)};
    }
    return out;
}

namespace {

// One battery rectangle: the bounding box of a distinct subset cut off by
// some coordinate-pair rectangle, with the subset as a bitmask over point
// positions. Subsets and their bounding boxes are in bijection, so masks
// double as dedup keys.
struct BatteryEntry {
    Rect box;
    int count_p = 0;
    std::vector<std::uint64_t> mask;
};

std::vector<std::uint64_t> subset_mask(const std::vector<int>& members, int n) {
    std::vector<std::uint64_t> mask((n + 63) / 64, 0);
    for (int i : members) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
    return mask;
}

int mask_intersection(const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

void add_entry(const PointSet& ps, std::vector<int> members,
               std::set<std::vector<std::uint64_t>>& seen,
               std::vector<BatteryEntry>& out) {
    if (members.empty()) return;
    const int n = static_cast<int>(ps.size());
    BatteryEntry e;
    e.mask = subset_mask(members, n);
    if (!seen.insert(e.mask).second) return;
    e.count_p = static_cast<int>(members.size());
    Rect box{ps[members[0]].x, ps[members[0]].x, ps[members[0]].y, ps[members[0]].y};
    for (int i : members) {
        box.xmin = std::min(box.xmin, ps[i].x);
        box.xmax = std::max(box.xmax, ps[i].x);
        box.ymin = std::min(box.ymin, ps[i].y);
        box.ymax = std::max(box.ymax, ps[i].y);
    }
    e.box = box;
    out.push_back(std::move(e));
}

// All distinct subsets cut off by coordinate-pair rectangles: per x-pair
// slab, every interval in the slab's y-order between distinct y values.
std::vector<BatteryEntry> exact_battery(const PointSet& ps) {
    const int n = static_cast<int>(ps.size());
    std::vector<double> xs;
    for (const Point& p : ps) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<BatteryEntry> out;
    for (size_t a = 0; a < xs.size(); ++a) {
        for (size_t b = a; b < xs.size(); ++b) {
            std::vector<int> slab;
            for (int i = 0; i < n; ++i)
                if (ps[i].x >= xs[a] && ps[i].x <= xs[b]) slab.push_back(i);
            std::sort(slab.begin(), slab.end(),
                      [&](int l, int r) { return ps[l].y < ps[r].y; });
            for (size_t lo = 0; lo < slab.size(); ++lo) {
                if (lo > 0 && ps[slab[lo]].y == ps[slab[lo - 1]].y) continue;
                for (size_t hi = lo; hi < slab.size(); ++hi) {
                    if (hi + 1 < slab.size() && ps[slab[hi + 1]].y == ps[slab[hi]].y)
                        continue;
                    add_entry(ps,
                              std::vector<int>(slab.begin() + static_cast<long>(lo),
                                               slab.begin() + static_cast<long>(hi) + 1),
                              seen, out);
                }
            }
        }
    }
    return out;
}

std::vector<BatteryEntry> random_battery(const PointSet& ps, std::uint64_t seed,
                                         int cap) {
    const int n = static_cast<int>(ps.size());
    std::vector<double> xs(static_cast<size_t>(n)), ys(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<size_t>(i)] = ps[i].x;
        ys[static_cast<size_t>(i)] = ps[i].y;
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::mt19937_64 g(seed ^ 0x5bf03635d33b59a1ULL);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<BatteryEntry> out;
    int attempts = cap * 8;
    while (static_cast<int>(out.size()) < cap && attempts-- > 0) {
        size_t xi = g() % xs.size(), xj = g() % xs.size();
        size_t yi = g() % ys.size(), yj = g() % ys.size();
        Rect r{std::min(xs[xi], xs[xj]), std::max(xs[xi], xs[xj]),
               std::min(ys[yi], ys[yj]), std::max(ys[yi], ys[yj])};
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (contains(r, ps[i])) members.push_back(i);
        add_entry(ps, std::move(members), seen, out);
    }
    return out;
}

}  // namespace

MonteCarloReport verify_sampling_events(const PointSet& ps, int kappa_value,
                                        double eps, int trials,
                                        std::uint64_t seed,
                                        std::optional<double> alpha) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (kappa_value < 1) throw std::invalid_argument("kappa must be >= 1");
    if (!std::isfinite(eps) || eps <= 0.0)
        throw std::invalid_argument("eps must be positive");
    if (ps.empty()) throw std::invalid_argument("need at least one point");
    if (alpha) check_alpha(*alpha);

    const int n = static_cast<int>(ps.size());
    std::vector<BatteryEntry> battery =
        n <= 40 ? exact_battery(ps) : random_battery(ps, seed, 4000);

    std::vector<char> tracked(battery.size());
    for (size_t i = 0; i < battery.size(); ++i)
        tracked[i] = alpha ? battery[i].box.area() <= *alpha
                           : battery[i].count_p <= 4 * kappa_value;

    std::unordered_map<int, int> id_to_pos;
    for (int i = 0; i < n; ++i) id_to_pos[ps[i].id] = i;

    MonteCarloReport rep;
    rep.trials = trials;
    rep.trial_seed_base = seed;
    rep.tracked_count_bound = 144.0 * std::log(n) / (eps * eps);
    int est_ok_trials = 0, small_ok_trials = 0, joint_trials = 0;
    for (int t = 0; t < trials; ++t) {
        SamplingPlan plan =
            SamplingPlan::direct(n, kappa_value, eps, seed + static_cast<std::uint64_t>(t));
        PointSet s = rho_sample(ps, plan);
        std::vector<std::uint64_t> smask(static_cast<size_t>((n + 63) / 64), 0);
        for (const Point& p : s) {
            int pos = id_to_pos.at(p.id);
            smask[static_cast<size_t>(pos >> 6)] |= std::uint64_t{1} << (pos & 63);
        }
        bool est_ok = true, small_ok = true;
        int max_tracked = 0;
        for (size_t i = 0; i < battery.size(); ++i) {
            int in_s = mask_intersection(battery[i].mask, smask);
            double x_r = in_s / plan.rho;
            int c = battery[i].count_p;
            if (4 * c >= kappa_value) {
                if (x_r < (1.0 - eps) * c || x_r > (1.0 + eps) * c) est_ok = false;
            } else {
                if (!(x_r < kappa_value / 2.0)) small_ok = false;
            }
            if (tracked[i]) max_tracked = std::max(max_tracked, in_s);
        }
        rep.sample_sizes.push_back(static_cast<int>(s.size()));
        rep.estimate_ok.push_back(est_ok ? 1 : 0);
        rep.smallrect_ok.push_back(small_ok ? 1 : 0);
        rep.max_tracked_count.push_back(max_tracked);
        est_ok_trials += est_ok;
        small_ok_trials += small_ok;
        joint_trials += est_ok && small_ok;
    }
    rep.freq_estimate_ok = static_cast<double>(est_ok_trials) / trials;
    rep.freq_smallrect_ok = static_cast<double>(small_ok_trials) / trials;
    rep.freq_joint_ok = static_cast<double>(joint_trials) / trials;
    return rep;
}

}  // namespace krect
