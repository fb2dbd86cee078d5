#include "krect/exact_min_area.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "krect/anchored.hpp"
#include "krect/batched_report.hpp"
#include "krect/oracle.hpp"

namespace krect {

namespace {

bool all_same_y(const PointSet& ps) {
    auto oy = ps.order_y();
    return ps[oy.front()].y == ps[oy.back()].y;
}

double mirror_y(double ell_y, double y) { return std::fma(2.0, ell_y, -y); }

}  // namespace

// Best-balanced splitting line through a gap between adjacent distinct y
// values, or nothing when no gap admits a strictly-between double.
std::optional<SplitLine> detail::try_split(const PointSet& ps) {
    if (ps.size() < 2) return std::nullopt;
    auto oy = ps.order_y();
    const int n = static_cast<int>(ps.size());
    int best_cost = n + 1;
    std::optional<SplitLine> best;
    for (int j = 0; j + 1 < n; ++j) {
        double lo = ps[oy[j]].y;
        double hi = ps[oy[j + 1]].y;
        if (lo == hi) continue;
        double mid = lo + (hi - lo) / 2;
        if (!(lo < mid && mid < hi)) continue;  // adjacent doubles, no room
        int cost = std::max(j + 1, n - j - 1);
        if (cost < best_cost) {
            best_cost = cost;
            best = SplitLine{mid};
        }
    }
    return best;
}

namespace {

// Minimum-area answer when every point shares one y: the tightest k-window
// in x at height zero, which is also what the enumeration oracle picks.
AreaResult flat_answer(const PointSet& ps, int k) {
    auto ox = ps.order_x();
    Rect r{ps[ox[0]].x, ps[ox[static_cast<size_t>(k) - 1]].x, ps[ox[0]].y, ps[ox[0]].y};
    return AreaResult{r.area(), r, count_in(ps, r)};
}

constexpr size_t kLeafSize = 8;

// Non-flat leaves fall back to full enumeration; cap how large such a leaf
// may get when the input's y values are too degenerate to split.
constexpr size_t kMaxEnumLeaf = 256;

// Shared state of one (possibly pruned) optimum search over a subtree.
struct Search {
    int kp = 0;
    double prune_cap = kInfArea;  // candidates above this can never matter
    double early_leq = -kInfArea; // stop at the first candidate at or below
    AreaResult best = AreaResult::infeasible();
    bool done = false;
    detail::PhiScratch scratch;

    void offer(const AreaResult& cand) {
        if (!cand.feasible() || cand.area > prune_cap) return;
        if (tighter(cand, best)) best = cand;
        if (best.area <= early_leq) done = true;
    }

    double bound() const { return std::min(prune_cap, best.area); }
};

void solve_leaf(const PointSet& pts, Search& s) {
    if (static_cast<int>(pts.size()) < s.kp) return;
    if (all_same_y(pts)) {
        s.offer(flat_answer(pts, s.kp));
        return;
    }
    if (pts.size() > kMaxEnumLeaf)
        throw std::invalid_argument("y values too degenerate to split");
    s.offer(oracle_min_area(pts, s.kp));
}

void merge_into(const PointSet& pts, const QSets& qs, Search& s) {
    const size_t n = pts.size();
    for (size_t i = 0; i < n && !s.done; ++i) {
        if (static_cast<int>(qs.by_x[i].size()) < s.kp) continue;
        for (Side side : {Side::top, Side::bottom}) {
            AreaResult r = detail::phi_anchored(pts.points(), qs.by_x[i], qs.by_y[i],
                                                pts[i], s.kp, side, s.bound(),
                                                s.early_leq, s.scratch);
            s.offer(r);
            if (s.done) return;
        }
    }
}

void split_points(const PointSet& ps, SplitLine ell, std::vector<Point>& above,
                  std::vector<Point>& below) {
    above.clear();
    below.clear();
    for (const Point& p : ps) {
        if (p.y == ell.y) throw std::invalid_argument("split line passes through a point");
        (p.y > ell.y ? above : below).push_back(p);
    }
}

void check_budget(size_t n, int k, const char* who) {
    if (k < 1 || static_cast<size_t>(k) > n)
        throw std::invalid_argument(std::string(who) + ": k out of range");
}

}  // namespace

SplitLine choose_split(const PointSet& ps) {
    if (ps.size() < 2) throw std::invalid_argument("choose_split: need at least 2 points");
    std::optional<SplitLine> ell = detail::try_split(ps);
    if (!ell) throw std::invalid_argument("choose_split: no separating gap");
    return *ell;
}

QSets build_qsets(const PointSet& ps, SplitLine ell, int k) {
    if (k < 1) throw std::invalid_argument("build_qsets: k must be >= 1");
    const size_t n = ps.size();

    std::vector<int> above_of, below_of;  // ps indices per side
    for (size_t i = 0; i < n; ++i) {
        double y = ps[i].y;
        if (y == ell.y) throw std::invalid_argument("build_qsets: point on split line");
        (y > ell.y ? above_of : below_of).push_back(static_cast<int>(i));
    }

    // One side's queries: A holds that side's points; B adds the other
    // side's points mirrored across ell, so every p in ps has a corner on
    // each side. Corner order in B: own side first, then mirrored.
    auto side_runs = [&](const std::vector<int>& own, const std::vector<int>& other,
                         bool flip_y) {
        std::vector<Point> a, b;
        a.reserve(own.size());
        b.reserve(own.size() + other.size());
        for (int i : own) a.push_back(ps[i]);
        b = a;
        for (int i : other) b.push_back(Point{ps[i].x, mirror_y(ell.y, ps[i].y), ps[i].id});
        if (flip_y)
            for (auto* v : {&a, &b})
                for (Point& p : *v) p.y = -p.y;
        std::vector<Point> a_w = a, b_w = b;
        for (Point& p : a_w) p.x = -p.x;
        for (Point& p : b_w) p.x = -p.x;
        detail::SweepResult east = detail::sweep_ne(a, b, k);
        detail::SweepResult west = detail::sweep_ne(a_w, b_w, k);
        return std::pair{std::move(east), std::move(west)};
    };

    // Above side selects toward smaller y (quadrants below each corner), so
    // flip y to reuse the upward sweep; below side runs as-is.
    auto [above_east, above_west] = side_runs(above_of, below_of, true);
    auto [below_east, below_west] = side_runs(below_of, above_of, false);

    // B-position of each ps index in the two runs.
    std::vector<int> pos_above(n, -1), pos_below(n, -1);
    for (size_t j = 0; j < above_of.size(); ++j) pos_above[above_of[j]] = static_cast<int>(j);
    for (size_t j = 0; j < below_of.size(); ++j) pos_below[below_of[j]] = static_cast<int>(j);
    for (size_t j = 0; j < below_of.size(); ++j)
        pos_above[below_of[j]] = static_cast<int>(above_of.size() + j);
    for (size_t j = 0; j < above_of.size(); ++j)
        pos_below[above_of[j]] = static_cast<int>(below_of.size() + j);

    QSets qs;
    qs.k = k;
    qs.by_x.resize(n);
    qs.by_y.resize(n);
    std::vector<int> members;
    for (size_t i = 0; i < n; ++i) {
        members.clear();
        members.push_back(static_cast<int>(i));
        for (int ai : above_east.lists[pos_above[i]]) members.push_back(above_of[ai]);
        for (int ai : above_west.lists[pos_above[i]]) members.push_back(above_of[ai]);
        for (int ai : below_east.lists[pos_below[i]]) members.push_back(below_of[ai]);
        for (int ai : below_west.lists[pos_below[i]]) members.push_back(below_of[ai]);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        qs.by_x[i] = members;
        std::sort(qs.by_x[i].begin(), qs.by_x[i].end(),
                  [&](int l, int r) { return less_xid(ps[l], ps[r]); });
        qs.by_y[i] = members;
        std::sort(qs.by_y[i].begin(), qs.by_y[i].end(),
                  [&](int l, int r) { return less_yid(ps[l], ps[r]); });
    }
    return qs;
}

AreaResult merge_value(const PointSet& ps, SplitLine ell, int k_prime, const QSets& qsets) {
    (void)ell;
    if (k_prime < 1 || k_prime > qsets.k)
        throw std::invalid_argument("merge_value: k' out of range for these sets");
    Search s;
    s.kp = k_prime;
    merge_into(ps, qsets, s);
    if (s.best.feasible()) s.best.count = count_in(ps, *s.best.rect);
    return s.best;
}

namespace {

std::unique_ptr<DCNode> build_node(std::vector<Point> pts_vec, int k) {
    auto nd = std::make_unique<DCNode>();
    nd->pts = PointSet(std::move(pts_vec));
    std::optional<SplitLine> ell;
    if (nd->pts.size() > kLeafSize) ell = detail::try_split(nd->pts);
    if (!ell) {
        nd->leaf = true;
        return nd;
    }
    nd->ell = *ell;
    std::vector<Point> above, below;
    split_points(nd->pts, nd->ell, above, below);
    nd->qsets = build_qsets(nd->pts, nd->ell, k);
    nd->above = build_node(std::move(above), k);
    nd->below = build_node(std::move(below), k);
    return nd;
}

void solve_node(const DCNode& nd, Search& s) {
    if (s.done || static_cast<int>(nd.pts.size()) < s.kp) return;
    if (nd.leaf) {
        solve_leaf(nd.pts, s);
        return;
    }
    // Children first: their optima tighten the pruning bound for the merge.
    solve_node(*nd.above, s);
    if (s.done) return;
    solve_node(*nd.below, s);
    if (s.done) return;
    merge_into(nd.pts, nd.qsets, s);
}

}  // namespace

DCTree preprocess(const PointSet& ps, int k) {
    check_budget(ps.size(), k, "preprocess");
    DCTree tree;
    tree.k = k;
    tree.root = build_node({ps.begin(), ps.end()}, k);
    return tree;
}

AreaResult query(const DCTree& tree, int k_prime) {
    if (k_prime < 1 || k_prime > tree.k)
        throw std::invalid_argument("query: k' out of range for this tree");
    Search s;
    s.kp = k_prime;
    solve_node(*tree.root, s);
    if (s.best.feasible()) s.best.count = count_in(tree.root->pts, *s.best.rect);
    return s.best;
}

AreaResult query_leq(const DCTree& tree, int k_prime, double alpha) {
    if (k_prime < 1 || k_prime > tree.k)
        throw std::invalid_argument("query_leq: k' out of range for this tree");
    if (!std::isfinite(alpha)) throw std::invalid_argument("query_leq: alpha not finite");
    Search s;
    s.kp = k_prime;
    s.prune_cap = alpha;
    s.early_leq = alpha;
    solve_node(*tree.root, s);
    if (s.best.feasible()) s.best.count = count_in(tree.root->pts, *s.best.rect);
    return s.best;
}

namespace {

void solve_oneshot(const PointSet& pts, int k, Search& s) {
    if (static_cast<int>(pts.size()) < s.kp) return;
    std::optional<SplitLine> ell;
    if (pts.size() > kLeafSize) ell = detail::try_split(pts);
    if (!ell) {
        solve_leaf(pts, s);
        return;
    }
    std::vector<Point> above, below;
    split_points(pts, *ell, above, below);
    solve_oneshot(PointSet(std::move(above)), k, s);
    if (s.done) return;
    solve_oneshot(PointSet(std::move(below)), k, s);
    if (s.done) return;
    QSets qs = build_qsets(pts, *ell, k);
    merge_into(pts, qs, s);
}

}  // namespace

AreaResult min_area_rect(const PointSet& ps, int k) {
    check_budget(ps.size(), k, "min_area_rect");
    Search s;
    s.kp = k;
    solve_oneshot(ps, k, s);
    if (s.best.feasible()) s.best.count = count_in(ps, *s.best.rect);
    return s.best;
}

AreaResult min_area_leq(const PointSet& ps, int k, double alpha) {
    check_budget(ps.size(), k, "min_area_leq");
    if (!std::isfinite(alpha)) throw std::invalid_argument("min_area_leq: alpha not finite");
    Search s;
    s.kp = k;
    s.prune_cap = alpha;
    s.early_leq = alpha;
    solve_oneshot(ps, k, s);
    if (s.best.feasible()) s.best.count = count_in(ps, *s.best.rect);
    return s.best;
}

}  // namespace krect
