#pragma once

// Planar primitives shared by every module: points with stable ids,
// id-ordered point sets, closed axis-parallel rectangles, and the
// (area, rect, count) result record with its deterministic tie rule.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace krect {

using std::size_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
    int id = -1;

    friend bool operator==(const Point&, const Point&) = default;
};

// (coordinate, id) lexicographic orders; every tie anywhere in the library
// is broken this way.
inline bool less_xid(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.id < b.id;
}
inline bool less_yid(const Point& a, const Point& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
}

// Immutable point collection. Validates on construction: finite coordinates,
// unique ids, no duplicate (x, y) pairs. Keeps both coordinate orders.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts);

    size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

    // Indices into points(), sorted by (x, id) / (y, id).
    std::span<const int> order_x() const { return order_x_; }
    std::span<const int> order_y() const { return order_y_; }

    std::vector<Point>::const_iterator begin() const { return pts_.begin(); }
    std::vector<Point>::const_iterator end() const { return pts_.end(); }

private:
    std::vector<Point> pts_;
    std::vector<int> order_x_;
    std::vector<int> order_y_;
};

// Closed rectangle [xmin, xmax] x [ymin, ymax]. Degenerate (zero width or
// height) rectangles are legal.
struct Rect {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    double area() const { return (xmax - xmin) * (ymax - ymin); }

    friend bool operator==(const Rect&, const Rect&) = default;
};

inline bool contains(const Rect& r, const Point& p) {
    return r.xmin <= p.x && p.x <= r.xmax && r.ymin <= p.y && p.y <= r.ymax;
}

int count_in(const PointSet& ps, const Rect& r);
int count_in(std::span<const Point> pts, const Rect& r);

// Bounding box; errors on an empty set.
Rect bbox(const PointSet& ps);
Rect bbox(std::span<const Point> pts);

constexpr double kInfArea = std::numeric_limits<double>::infinity();

// Outcome of a min-area style computation. Infeasible results carry
// area = +inf and no rectangle.
struct AreaResult {
    double area = kInfArea;
    std::optional<Rect> rect;
    int count = 0;

    bool feasible() const { return rect.has_value(); }

    static AreaResult infeasible() { return AreaResult{}; }
};

// Strictly-better comparison: (area, xmin, ymin, xmax, ymax) lexicographic,
// feasible beats infeasible. Total, so min-reductions are order independent.
bool tighter(const AreaResult& a, const AreaResult& b);

// min with the tie rule; keeps `a` when neither is strictly better.
inline const AreaResult& min_result(const AreaResult& a, const AreaResult& b) {
    return tighter(b, a) ? b : a;
}

}  // namespace krect
