#pragma once

// Recursive 4-approximation of the maximum number of points coverable by an
// axis-parallel rectangle of area at most alpha.

#include <vector>

#include "krect/exact_min_area.hpp"
#include "krect/geometry.hpp"

namespace krect {

// Two rectangles per point, each of area alpha, cornered at the point with
// one edge contained in the split line: east ([x, x+w]) then west
// ([x-w, x]) in point order, so rects[2*i] and rects[2*i+1] belong to ps[i].
struct CandidateRects {
    std::vector<Rect> rects;
};

CandidateRects candidate_rects(const PointSet& ps, SplitLine ell, double alpha);

struct KappaResult {
    int kappa = 0;
    Rect witness;
};

// kappa satisfies optpoints/4 <= kappa <= optpoints where optpoints is the
// best count over closed rectangles of area <= alpha. The witness has area
// alpha (up to rounding) and contains exactly kappa points. Recursion on
// the same split lines as the exact solver; every candidate is counted
// against the full set through one shared counting structure.
KappaResult kappa(const PointSet& ps, double alpha);

// Exact maximum number of points coverable by a rectangle of area at most
// alpha: binary search on the count between kappa and 4*kappa, deciding
// each probe with the exact solver. The result's count is the optimum and
// its rect is a witness with area <= alpha covering that many points.
AreaResult max_points_exact(const PointSet& ps, double alpha);

}  // namespace krect
