#pragma once

// Batched k-extreme reporting: for every anchor b in B, the k points of A
// inside b's quadrant that come first in the sweep direction. One sweep
// answers all anchors in O(k|B| + (|A|+|B|) log(|A|+|B|)).

#include <span>

#include "krect/geometry.hpp"

namespace krect {

// Quadrant shape anchored at b. NE means [b.x, inf) x [b.y, inf); the
// reported points are those with smallest (x, id). The other orientations
// are reflections: west flips x (largest x first), south flips y.
enum class Orientation { NE, NW, SE, SW };

struct ReportResult {
    // lists[i] answers the anchor stored at B[i], ordered by the sweep
    // direction, never longer than k.
    std::vector<std::vector<Point>> lists;
    // Total (point, anchor) report events; bounded by k * |B|.
    long long report_events = 0;
};

ReportResult batched_k_extreme(const PointSet& a, const PointSet& b, int k, Orientation o);

// Coordinate reflection that maps an orientation's quadrants to NE quadrants.
// An involution; ids are preserved.
PointSet reflect(const PointSet& ps, Orientation o);

namespace detail {

// NE-orientation sweep on raw arrays; lists hold indices into `a`.
// At equal sweep keys every B event precedes every A event, so closed
// containment holds and a point present in both sets reports itself.
struct SweepResult {
    std::vector<std::vector<int>> lists;
    long long report_events = 0;
};

SweepResult sweep_ne(std::span<const Point> a, std::span<const Point> b, int k);

}  // namespace detail

}  // namespace krect
