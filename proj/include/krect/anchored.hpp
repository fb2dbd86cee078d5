#pragma once

// Anchored subproblem: the minimum-area rectangle covering >= k points of Q
// with a designated member q on its top or bottom edge. Quadratic in |Q|;
// the divide-and-conquer solver calls this on O(k)-sized sets.

#include <span>
#include <vector>

#include "krect/geometry.hpp"

namespace krect {

enum class Side { top, bottom };

// Minimum area over rectangles R with q on the named horizontal edge
// (top: ymax = q.y, bottom: ymin = q.y), q.x inside the x-range, and at
// least k points of q_set inside R. Points with y equal to q.y belong to
// both sides. Infeasible when the side holds fewer than k points.
AreaResult phi_one_side(const PointSet& q_set, const Point& q, int k, Side side);

// Best of both sides.
AreaResult phi(const PointSet& q_set, const Point& q, int k);

// phi for every k = 1..|Q|, index k-1. Cubic; small sets only.
std::vector<AreaResult> phi_all_k(const PointSet& q_set, const Point& q);

namespace detail {

// Reused buffers; phi_anchored is called once per point per tree node, so
// per-call allocation would dominate.
struct PhiScratch {
    std::vector<int> side;    // side members in (y, id) order
    std::vector<int> side_x;  // side members in (x, id) order
    std::vector<int> active;  // current slab in (x, id) order
};

// Core routine on raw spans. order_x / order_y index into pts and define the
// candidate set (they need not cover all of pts, but must list the same
// members in their two orders). Candidates with area strictly above prune_gt
// are skipped; once any candidate with area <= early_leq appears it is
// returned immediately. Pass +inf / -inf to disable. The reported count is
// exact over the indexed members.
AreaResult phi_anchored(std::span<const Point> pts, std::span<const int> order_x,
                        std::span<const int> order_y, const Point& q, int k,
                        Side side, double prune_gt, double early_leq,
                        PhiScratch& scratch);

}  // namespace detail

}  // namespace krect
