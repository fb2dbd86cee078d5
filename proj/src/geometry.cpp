#include "krect/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

namespace krect {

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    for (const Point& p : pts_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("PointSet: non-finite coordinate");
    }
    std::unordered_set<int> ids;
    ids.reserve(pts_.size() * 2);
    for (const Point& p : pts_) {
        if (!ids.insert(p.id).second)
            throw std::invalid_argument("PointSet: duplicate id " + std::to_string(p.id));
    }
    order_x_.resize(pts_.size());
    order_y_.resize(pts_.size());
    std::iota(order_x_.begin(), order_x_.end(), 0);
    std::iota(order_y_.begin(), order_y_.end(), 0);
    std::sort(order_x_.begin(), order_x_.end(),
              [&](int a, int b) { return less_xid(pts_[a], pts_[b]); });
    std::sort(order_y_.begin(), order_y_.end(),
              [&](int a, int b) { return less_yid(pts_[a], pts_[b]); });
    // Duplicate (x, y) pairs are adjacent in x-order.
    for (size_t i = 1; i < order_x_.size(); ++i) {
        const Point& a = pts_[order_x_[i - 1]];
        const Point& b = pts_[order_x_[i]];
        if (a.x == b.x && a.y == b.y)
            throw std::invalid_argument("PointSet: duplicate point (" + std::to_string(a.x) +
                                        ", " + std::to_string(a.y) + ")");
    }
}

int count_in(std::span<const Point> pts, const Rect& r) {
    int c = 0;
    for (const Point& p : pts)
        if (contains(r, p)) ++c;
    return c;
}

int count_in(const PointSet& ps, const Rect& r) { return count_in(std::span(ps.points()), r); }

Rect bbox(std::span<const Point> pts) {
    if (pts.empty()) throw std::invalid_argument("bbox: empty point set");
    Rect r{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const Point& p : pts) {
        r.xmin = std::min(r.xmin, p.x);
        r.xmax = std::max(r.xmax, p.x);
        r.ymin = std::min(r.ymin, p.y);
        r.ymax = std::max(r.ymax, p.y);
    }
    return r;
}

Rect bbox(const PointSet& ps) { return bbox(std::span(ps.points())); }

bool tighter(const AreaResult& a, const AreaResult& b) {
    if (!a.feasible()) return false;
    if (!b.feasible()) return true;
    if (a.area != b.area) return a.area < b.area;
    const Rect& ra = *a.rect;
    const Rect& rb = *b.rect;
    if (ra.xmin != rb.xmin) return ra.xmin < rb.xmin;
    if (ra.ymin != rb.ymin) return ra.ymin < rb.ymin;
    if (ra.xmax != rb.xmax) return ra.xmax < rb.xmax;
    return ra.ymax < rb.ymax;
}

}  // namespace krect
