#include "krect/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "krect/approx_count.hpp"
#include "krect/batched_report.hpp"
#include "krect/dataset.hpp"
#include "krect/exact_min_area.hpp"
#include "krect/oracle.hpp"
#include "krect/sampling.hpp"

namespace krect {

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_check(const std::string& msg) { throw check_failure(msg); }

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

std::string counted(long long n, const std::string& what) {
    std::ostringstream os;
    os << n << " " << what;
    return os.str();
}

// Integer-grid instance: many shared coordinates, exercises tie handling.
PointSet gen_gridlike(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    const int side = std::max(3, static_cast<int>(std::sqrt(2.0 * n)) + 1);
    std::set<std::pair<double, double>> seen;
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        double x = static_cast<double>(g() % side);
        double y = static_cast<double>(g() % side);
        if (!seen.insert({x, y}).second) continue;
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet{std::move(pts)};
}

PointSet pick_instance(int n, std::uint64_t seed, int flavor) {
    switch (flavor % 3) {
        case 0: return gen_uniform(n, seed);
        case 1: return gen_clusters(n, seed);
        default: return gen_gridlike(n, seed);
    }
}

bool in_quadrant(const Point& a, const Point& b, Orientation o) {
    bool x_ok = (o == Orientation::NE || o == Orientation::SE) ? a.x >= b.x : a.x <= b.x;
    bool y_ok = (o == Orientation::NE || o == Orientation::NW) ? a.y >= b.y : a.y <= b.y;
    return x_ok && y_ok;
}

std::vector<Point> direct_filter_answer(const PointSet& a, const Point& b, int k, Orientation o) {
    std::vector<Point> hits;
    for (const Point& p : a)
        if (in_quadrant(p, b, o)) hits.push_back(p);
    const bool west = o == Orientation::NW || o == Orientation::SW;
    std::sort(hits.begin(), hits.end(), [&](const Point& l, const Point& r) {
        double lx = west ? -l.x : l.x;
        double rx = west ? -r.x : r.x;
        if (lx != rx) return lx < rx;
        return l.id < r.id;
    });
    if (static_cast<int>(hits.size()) > k) hits.resize(static_cast<size_t>(k));
    return hits;
}

}  // namespace

std::vector<CheckResult> verify_oracle_suite(std::uint64_t seed) {
    std::vector<CheckResult> out;

    run_check(out, "subset-vs-rectangle-enumeration", [&] {
        long long agreements = 0;
        int flavor = 0;
        for (int n : {6, 9, 11, 13}) {
            PointSet ps = pick_instance(n, seed + static_cast<std::uint64_t>(n), flavor++);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            for (int k = 1; k <= n; ++k) {
                AreaResult sub = oracle_min_area_subsets(ps, k);
                if (sub.area != table[k - 1].area)
                    fail_check("subset optimum differs from rectangle optimum at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
                ++agreements;
            }
        }
        return counted(agreements, "agreements");
    });

    run_check(out, "duality-round-trip", [&] {
        long long rounds = 0;
        int flavor = 1;
        for (int n : {8, 14, 20}) {
            PointSet ps = pick_instance(n, seed + 100 + static_cast<std::uint64_t>(n), flavor++);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            for (int k = 1; k <= n; ++k) {
                AreaResult mp = oracle_max_points(ps, table[k - 1].area);
                if (mp.count < k)
                    fail_check("max-points under the k-optimal area fell below k=" +
                               std::to_string(k) + " at n=" + std::to_string(n));
                ++rounds;
            }
        }
        return counted(rounds, "round trips");
    });

    run_check(out, "crossing-restriction-and-recursion", [&] {
        long long checks = 0;
        int flavor = 2;
        for (int n : {10, 16}) {
            PointSet ps = pick_instance(n, seed + 200 + static_cast<std::uint64_t>(n), flavor++);
            SplitLine ell = choose_split(ps);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            std::vector<Point> above, below;
            for (const Point& p : ps)
                (p.y > ell.y ? above : below).push_back(p);
            PointSet ups{above}, dps{below};
            for (int k = 1; k <= n; ++k) {
                AreaResult cross = oracle_min_area_crossing(ps, ell.y, k);
                if (cross.feasible() && cross.area < table[k - 1].area)
                    fail_check("crossing-restricted optimum beat the unrestricted one");
                // The optimum is the best of: crossing, entirely above,
                // entirely below.
                double best = cross.feasible() ? cross.area : kInfArea;
                if (static_cast<int>(ups.size()) >= k)
                    best = std::min(best, oracle_min_area(ups, k).area);
                if (static_cast<int>(dps.size()) >= k)
                    best = std::min(best, oracle_min_area(dps, k).area);
                if (best != table[k - 1].area)
                    fail_check("split recursion identity failed at k=" + std::to_string(k));
                ++checks;
            }
        }
        return counted(checks, "identities");
    });

    run_check(out, "batched-report-vs-direct-filter", [&] {
        std::mt19937_64 g(seed + 300);
        long long lists = 0;
        for (int round = 0; round < 12; ++round) {
            int na = 1 + static_cast<int>(g() % 40);
            int nb = 1 + static_cast<int>(g() % 40);
            PointSet a = round % 2 ? gen_gridlike(na, g()) : gen_uniform(na, g());
            PointSet b = round % 2 ? gen_uniform(nb, g()) : gen_gridlike(nb, g());
            for (int k : {1, 3, 8}) {
                for (Orientation o :
                     {Orientation::NE, Orientation::NW, Orientation::SE, Orientation::SW}) {
                    ReportResult r = batched_k_extreme(a, b, k, o);
                    if (static_cast<int>(r.lists.size()) != static_cast<int>(b.size()))
                        fail_check("one list per anchor violated");
                    long long events = 0;
                    for (size_t i = 0; i < b.size(); ++i) {
                        std::vector<Point> want = direct_filter_answer(a, b[i], k, o);
                        if (r.lists[i].size() != want.size())
                            fail_check("list length differs from direct filter");
                        for (size_t j = 0; j < want.size(); ++j)
                            if (!(r.lists[i][j] == want[j]))
                                fail_check("list entry differs from direct filter");
                        events += static_cast<long long>(want.size());
                        ++lists;
                    }
                    if (r.report_events != events)
                        fail_check("report event count does not match list totals");
                    if (r.report_events > static_cast<long long>(k) * static_cast<long long>(b.size()))
                        fail_check("report events exceed k times the anchor count");
                }
            }
        }
        return counted(lists, "lists compared");
    });

    return out;
}

std::vector<CheckResult> verify_invariants_suite(std::uint64_t seed) {
    std::vector<CheckResult> out;

    run_check(out, "exact-matches-oracle", [&] {
        long long pairs = 0;
        int flavor = 0;
        for (int n : {5, 9, 13, 17, 21, 24}) {
            PointSet ps = pick_instance(n, seed + static_cast<std::uint64_t>(n), flavor++);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            for (int k = 1; k <= n; ++k) {
                AreaResult got = min_area_rect(ps, k);
                if (got.area != table[k - 1].area)
                    fail_check("exact solver differs from oracle at n=" + std::to_string(n) +
                               " k=" + std::to_string(k));
                if (!got.feasible() || got.count < k)
                    fail_check("exact witness misses its count at k=" + std::to_string(k));
                if (got.rect->area() != got.area)
                    fail_check("reported area is not the witness product");
                ++pairs;
            }
        }
        return counted(pairs, "(instance, k) pairs");
    });

    run_check(out, "root-merge-sandwich", [&] {
        long long checks = 0;
        int flavor = 1;
        for (int n : {12, 18}) {
            PointSet ps = pick_instance(n, seed + 400 + static_cast<std::uint64_t>(n), flavor++);
            SplitLine ell = choose_split(ps);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            for (int k : {2, n / 2, n}) {
                QSets qs = build_qsets(ps, ell, k);
                AreaResult v = merge_value(ps, ell, k, qs);
                double crossing = oracle_min_area_crossing(ps, ell.y, k).area;
                if (v.area < table[k - 1].area)
                    fail_check("merge value undercut the optimum");
                if (v.area > crossing)
                    fail_check("merge value exceeded the crossing-restricted optimum");
                if (crossing == table[k - 1].area && v.area != crossing)
                    fail_check("merge value missed a crossing optimum");
                ++checks;
            }
        }
        return counted(checks, "sandwich checks");
    });

    run_check(out, "candidate-set-budget", [&] {
        long long nodes = 0;
        for (int k : {2, 5}) {
            PointSet ps = gen_uniform(64, seed + 500 + static_cast<std::uint64_t>(k));
            DCTree tree = preprocess(ps, k);
            std::function<void(const DCNode&)> walk = [&](const DCNode& node) {
                ++nodes;
                if (node.leaf) return;
                for (size_t i = 0; i < node.pts.size(); ++i) {
                    if (node.qsets.by_x[i].size() > static_cast<size_t>(4 * k))
                        fail_check("a candidate set exceeded 4k members");
                    if (node.qsets.by_x[i].size() != node.qsets.by_y[i].size())
                        fail_check("the two candidate orders disagree in size");
                }
                for (const Point& p : node.above->pts)
                    if (!(p.y > node.ell.y)) fail_check("above child holds a point at or below the line");
                for (const Point& p : node.below->pts)
                    if (!(p.y < node.ell.y)) fail_check("below child holds a point at or above the line");
                walk(*node.above);
                walk(*node.below);
            };
            walk(*tree.root);
        }
        return counted(nodes, "nodes walked");
    });

    run_check(out, "affine-scale-behavior", [&] {
        PointSet ps = gen_uniform(20, seed + 600);
        struct Map {
            double ax, bx, ay, by;
        };
        long long checks = 0;
        for (Map m : {Map{2, 0.3, 3, -1}, Map{-1, 2, 5, 0}, Map{0.1, 0, 10, 7}}) {
            std::vector<Point> mapped;
            for (const Point& p : ps)
                mapped.push_back({m.ax * p.x + m.bx, m.ay * p.y + m.by, p.id});
            PointSet mps{mapped};
            double factor = std::abs(m.ax * m.ay);
            for (int k : {2, 10, 20}) {
                double orig = min_area_rect(ps, k).area;
                double got = min_area_rect(mps, k).area;
                if (std::abs(got - factor * orig) > 1e-9 * std::max(1.0, factor * orig))
                    fail_check("area did not scale by the map determinant");
                ++checks;
            }
        }
        return counted(checks, "scaled instances");
    });

    run_check(out, "kappa-four-approximation", [&] {
        long long checks = 0;
        int flavor = 0;
        for (int n : {12, 20, 30}) {
            PointSet ps = pick_instance(n, seed + 700 + static_cast<std::uint64_t>(n), flavor++);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            for (int k : {2, n / 3, 2 * n / 3}) {
                if (k < 1) continue;
                double alpha = table[k - 1].area;
                if (alpha <= 0.0) alpha = 1e-9;
                KappaResult kr = kappa(ps, alpha);
                int opt = oracle_max_points(ps, alpha).count;
                if (kr.kappa > opt) fail_check("kappa exceeded the optimum");
                if (4 * kr.kappa < opt) fail_check("kappa fell below a quarter of the optimum");
                if (count_in(ps, kr.witness) != kr.kappa)
                    fail_check("kappa witness count differs from kappa");
                if (kr.witness.area() > alpha) fail_check("kappa witness exceeds the area budget");
                ++checks;
            }
        }
        return counted(checks, "bound checks");
    });

    run_check(out, "decision-queries", [&] {
        PointSet ps = gen_clusters(16, seed + 800);
        std::vector<AreaResult> table = oracle_min_area_table(ps);
        DCTree tree = preprocess(ps, 16);
        long long checks = 0;
        for (int k : {2, 8, 16}) {
            double opt = table[k - 1].area;
            for (double alpha : {opt * 0.95 - 1e-9, opt, opt * 1.05 + 1e-9}) {
                bool want = opt <= alpha;
                if (query_leq(tree, k, alpha).feasible() != want)
                    fail_check("tree decision disagrees with the oracle");
                if (min_area_leq(ps, k, alpha).feasible() != want)
                    fail_check("one-shot decision disagrees with the oracle");
                ++checks;
            }
        }
        return counted(checks, "decisions");
    });

    run_check(out, "exact-max-points-duality", [&] {
        long long checks = 0;
        int flavor = 2;
        for (int n : {10, 15}) {
            PointSet ps = pick_instance(n, seed + 900 + static_cast<std::uint64_t>(n), flavor++);
            std::vector<AreaResult> table = oracle_min_area_table(ps);
            for (int k = 2; k <= n; k += 3) {
                double alpha = table[k - 1].area;
                if (alpha <= 0.0) continue;
                AreaResult want = oracle_max_points(ps, alpha);
                AreaResult got = max_points_exact(ps, alpha);
                if (got.count != want.count)
                    fail_check("exact max-points differs from the oracle at k=" + std::to_string(k));
                if (got.rect->area() > alpha) fail_check("exact max-points witness over budget");
                ++checks;
            }
        }
        return counted(checks, "alpha probes");
    });

    return out;
}

std::vector<CheckResult> verify_sampling_suite(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_sampling_suite: need trials >= 1");
    std::vector<CheckResult> out;

    run_check(out, "plan-formula", [&] {
        long long kappa_big = std::llround(288.0 * std::log(1000.0));
        SamplingPlan quarter = SamplingPlan::direct(1000, static_cast<int>(kappa_big), 1.0, seed);
        double want = 72.0 / (static_cast<double>(kappa_big) * 1.0 * 1.0) * std::log(1000.0);
        if (quarter.rho != want) fail_check("rho formula mismatch in the subsampled regime");
        SamplingPlan alg = SamplingPlan::for_algorithm(5000, 60, 0.3, seed);
        if (alg.delta != 0.3 / 3.0) fail_check("delta is not a third of eps");
        if (alg.rho != 1.0) fail_check("rho failed to clamp at 1 in the dense regime");
        SamplingPlan single = SamplingPlan::direct(1, 1, 0.5, seed);
        if (single.rho != 1.0) fail_check("single-point plans must keep everything");
        return std::string("formula, clamp, and single-point cases hold");
    });

    run_check(out, "identity-sample-at-full-rate", [&] {
        PointSet ps = gen_clusters(200, seed + 10);
        SamplingPlan plan = SamplingPlan::for_algorithm(200, 50, 0.3, seed + 11);
        if (plan.rho != 1.0) fail_check("expected a full-rate plan at this scale");
        PointSet s = rho_sample(ps, plan);
        if (s.size() != ps.size()) fail_check("full-rate sample dropped points");
        for (size_t i = 0; i < ps.size(); ++i)
            if (!(s[i] == ps[i])) fail_check("full-rate sample reordered points");
        return std::string("sample is the identity at rho = 1");
    });

    run_check(out, "sample-size-concentration", [&] {
        int n = 1000;
        int kappa_half = static_cast<int>(std::llround(2.0 * 72.0 * std::log(1000.0)));
        int draws = std::min(trials, 20);
        for (int t = 0; t < draws; ++t) {
            SamplingPlan plan = SamplingPlan::direct(n, kappa_half, 1.0,
                                                     seed + 20 + static_cast<std::uint64_t>(t));
            if (plan.rho >= 1.0) fail_check("expected a subsampling plan");
            PointSet ps = gen_uniform(n, seed + 50 + static_cast<std::uint64_t>(t));
            PointSet s = rho_sample(ps, plan);
            double mean = n * plan.rho;
            double sigma = std::sqrt(n * plan.rho * (1.0 - plan.rho));
            if (std::abs(static_cast<double>(s.size()) - mean) > 5.0 * sigma)
                fail_check("sample size strayed past five standard deviations");
        }
        return counted(draws, "draws inside five sigma");
    });

    run_check(out, "event-frequencies", [&] {
        // Full-rate regime: estimates are exact, so every frequency is 1.
        PointSet dense = gen_clusters(40, seed + 60);
        double alpha = oracle_min_area(dense, 12).area * 1.2;
        KappaResult kr = kappa(dense, alpha);
        MonteCarloReport full =
            verify_sampling_events(dense, kr.kappa, 0.5, std::min(trials, 20), seed + 61, alpha);
        if (full.freq_joint_ok != 1.0) fail_check("full-rate trials must always succeed");
        for (int tracked : full.max_tracked_count)
            if (tracked > full.tracked_count_bound)
                fail_check("a tracked rectangle exceeded the count bound");
        // Genuine subsampling: synthetic kappa large enough to force rho < 1.
        PointSet wide = gen_uniform(300, seed + 62);
        MonteCarloReport sub = verify_sampling_events(wide, 700, 0.8, trials, seed + 63);
        std::ostringstream os;
        if (SamplingPlan::direct(300, 700, 0.8, seed).rho >= 1.0)
            fail_check("synthetic plan failed to subsample");
        if (sub.freq_joint_ok < 0.9) {
            os << "joint frequency " << sub.freq_joint_ok << " below 0.9";
            fail_check(os.str());
        }
        os << "joint frequencies " << full.freq_joint_ok << " and " << sub.freq_joint_ok;
        return os.str();
    });

    run_check(out, "approximation-guarantee", [&] {
        PointSet ps = gen_clusters(40, seed + 70);
        double alpha = oracle_min_area(ps, 12).area * 1.2;
        int opt = oracle_max_points(ps, alpha).count;
        int runs = std::min(trials, 30);
        for (int t = 0; t < runs; ++t) {
            AreaResult got = approx_max_points(ps, alpha, 0.5, seed + 80 + static_cast<std::uint64_t>(t));
            if (!got.feasible()) fail_check("approximation returned infeasible");
            if (got.rect->area() > alpha) fail_check("approximation witness over budget");
            if (got.count + 1e-9 < 0.5 * opt) fail_check("approximation fell below (1 - eps) opt");
        }
        return counted(runs, "runs met the guarantee");
    });

    run_check(out, "seed-determinism", [&] {
        PointSet ps = gen_clusters(120, seed + 90);
        double alpha = 0.002;
        AreaResult a = approx_max_points(ps, alpha, 0.3, seed + 91);
        AreaResult b = approx_max_points(ps, alpha, 0.3, seed + 91);
        if (!(a.count == b.count && a.area == b.area && *a.rect == *b.rect))
            fail_check("identical seeds produced different reports");
        return std::string("identical seeds reproduce bit-identical results");
    });

    return out;
}

}  // namespace krect
