#include "krect/anchored.hpp"

#include <algorithm>
#include <stdexcept>

namespace krect {

namespace detail {

namespace {

// Count of indexed members inside r; side_x holds them in (x, id) order.
int count_members(std::span<const Point> pts, const std::vector<int>& side_x,
                  const Rect& r) {
    int c = 0;
    for (int i : side_x) {
        const Point& p = pts[i];
        if (p.x > r.xmax) break;
        if (contains(r, p)) ++c;
    }
    return c;
}

}  // namespace

AreaResult phi_anchored(std::span<const Point> pts, std::span<const int> order_x,
                        std::span<const int> order_y, const Point& q, int k,
                        Side side, double prune_gt, double early_leq,
                        PhiScratch& scratch) {
    if (k < 1) throw std::invalid_argument("phi: k must be >= 1");
    const bool top = side == Side::top;

    auto on_side = [&](const Point& p) { return top ? p.y <= q.y : p.y >= q.y; };

    scratch.side.clear();
    scratch.side_x.clear();
    scratch.active.clear();
    for (int i : order_y)
        if (on_side(pts[i])) scratch.side.push_back(i);
    for (int i : order_x)
        if (on_side(pts[i])) scratch.side_x.push_back(i);

    const int m = static_cast<int>(scratch.side.size());
    if (m < k) return AreaResult::infeasible();

    // Lower bound on any candidate's width: the tightest k points of the
    // whole side, extended to cover q.x. Anchors only shrink the slab, so
    // no anchor can beat this width.
    double w_min = kInfArea;
    for (int i = 0; i + k <= m; ++i) {
        double lo = std::min(pts[scratch.side_x[i]].x, q.x);
        double hi = std::max(pts[scratch.side_x[static_cast<size_t>(i) + k - 1]].x, q.x);
        w_min = std::min(w_min, hi - lo);
    }

    // Anchors in order of increasing height; the slab grows by one point per
    // step. Heights are monotone, so once h * w_min exceeds the bound no
    // later anchor can matter.
    AreaResult best = AreaResult::infeasible();
    double bound = prune_gt;
    for (int step = 0; step < m; ++step) {
        const int ai = top ? scratch.side[static_cast<size_t>(m) - 1 - step]
                           : scratch.side[step];
        const Point& a = pts[ai];
        const double h = top ? q.y - a.y : a.y - q.y;
        if (h * w_min > bound) break;

        auto pos = std::lower_bound(scratch.active.begin(), scratch.active.end(), ai,
                                    [&](int l, int r) { return less_xid(pts[l], pts[r]); });
        scratch.active.insert(pos, ai);
        if (static_cast<int>(scratch.active.size()) < k) continue;

        const int sz = static_cast<int>(scratch.active.size());
        const double ymin = top ? a.y : q.y;
        const double ymax = top ? q.y : a.y;
        for (int i = 0; i + k <= sz; ++i) {
            double lo = std::min(pts[scratch.active[i]].x, q.x);
            double hi = std::max(pts[scratch.active[static_cast<size_t>(i) + k - 1]].x, q.x);
            double area = (hi - lo) * h;
            if (area > bound) continue;
            AreaResult cand{area, Rect{lo, hi, ymin, ymax}, 0};
            if (area <= early_leq) {
                cand.count = count_members(pts, scratch.side_x, *cand.rect);
                return cand;
            }
            if (tighter(cand, best)) {
                best = cand;
                bound = std::min(bound, best.area);
            }
        }
    }
    if (best.feasible()) best.count = count_members(pts, scratch.side_x, *best.rect);
    return best;
}

}  // namespace detail

namespace {

void check_member(const PointSet& q_set, const Point& q) {
    for (const Point& p : q_set)
        if (p == q) return;
    throw std::invalid_argument("phi: q not in set");
}

}  // namespace

AreaResult phi_one_side(const PointSet& q_set, const Point& q, int k, Side side) {
    if (k < 1) throw std::invalid_argument("phi: k must be >= 1");
    check_member(q_set, q);
    detail::PhiScratch scratch;
    return detail::phi_anchored(q_set.points(), q_set.order_x(), q_set.order_y(), q,
                                k, side, kInfArea, -kInfArea, scratch);
}

AreaResult phi(const PointSet& q_set, const Point& q, int k) {
    return min_result(phi_one_side(q_set, q, k, Side::top),
                      phi_one_side(q_set, q, k, Side::bottom));
}

std::vector<AreaResult> phi_all_k(const PointSet& q_set, const Point& q) {
    check_member(q_set, q);
    std::vector<AreaResult> out;
    out.reserve(q_set.size());
    for (int k = 1; k <= static_cast<int>(q_set.size()); ++k)
        out.push_back(phi(q_set, q, k));
    return out;
}

}  // namespace krect
