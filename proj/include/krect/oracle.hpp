#pragma once

// Brute-force reference solvers. Quartic-time enumeration, usable to about
// n = 60; every fast module is tested against these.

#include "krect/geometry.hpp"

namespace krect {

// Exact min-area rectangle covering >= k points, for every k at once
// (index k-1). Enumerates x-coordinate pairs and, per pair, consecutive
// windows in the y-order of the points inside the slab; a shrink argument
// makes this equivalent to enumerating all coordinate-pair rectangles.
std::vector<AreaResult> oracle_min_area_table(const PointSet& ps);

AreaResult oracle_min_area(const PointSet& ps, int k);

// Same, restricted to rectangles whose closed y-range contains ell_y.
// Includes rectangles with one y-edge exactly on the line (a feasible
// crossing rectangle may need to stretch to reach it).
std::vector<AreaResult> oracle_min_area_crossing_table(const PointSet& ps, double ell_y);

AreaResult oracle_min_area_crossing(const PointSet& ps, double ell_y, int k);

// Largest count achievable by a rectangle of area <= alpha, with witness.
// alpha must be >= 0 (zero-area rectangles are legal).
AreaResult oracle_max_points(const PointSet& ps, double alpha);

// Min-area rectangle with q on its top (side_top) or bottom edge covering
// >= k points of q_set; q must be a member of q_set.
AreaResult oracle_phi_one_side(const PointSet& q_set, const Point& q, int k, bool side_top);

AreaResult oracle_phi(const PointSet& q_set, const Point& q, int k);

// Independent double check: min over all k-subsets of the subset bbox area.
// Exponential; refuses n > 20.
AreaResult oracle_min_area_subsets(const PointSet& ps, int k);

}  // namespace krect
