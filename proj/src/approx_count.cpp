#include "krect/approx_count.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "krect/range_count.hpp"

namespace krect {

namespace {

void check_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::invalid_argument("alpha must be a positive finite number");
}

// Pull one edge of r toward its partner until area(r) <= alpha. Division
// rounding and coordinate absorption can push the materialized area a few
// ulps past alpha; callers promise witness area <= alpha exactly. The
// last-resort collapse only fires at coordinate scales where an ulp of x
// dwarfs the target width.
Rect shrink_to_fit(Rect r, double alpha, bool x_axis, bool pull_max) {
    for (int i = 0; i < 128 && r.area() > alpha; ++i) {
        if (x_axis && pull_max) r.xmax = std::nextafter(r.xmax, r.xmin);
        if (x_axis && !pull_max) r.xmin = std::nextafter(r.xmin, r.xmax);
        if (!x_axis && pull_max) r.ymax = std::nextafter(r.ymax, r.ymin);
        if (!x_axis && !pull_max) r.ymin = std::nextafter(r.ymin, r.ymax);
    }
    if (r.area() > alpha) {
        if (x_axis && pull_max) r.xmax = r.xmin;
        if (x_axis && !pull_max) r.xmin = r.xmax;
        if (!x_axis && pull_max) r.ymax = r.ymin;
        if (!x_axis && !pull_max) r.ymin = r.ymax;
    }
    return r;
}

Rect anchored_pair(const Point& p, double ell_y, double alpha, bool east) {
    double h = std::abs(p.y - ell_y);
    double w = alpha / h;
    double ylo = std::min(p.y, ell_y);
    double yhi = std::max(p.y, ell_y);
    Rect r = east ? Rect{p.x, p.x + w, ylo, yhi} : Rect{p.x - w, p.x, ylo, yhi};
    return shrink_to_fit(r, alpha, true, east);
}

bool rect_lex_less(const Rect& a, const Rect& b) {
    return std::tie(a.xmin, a.ymin, a.xmax, a.ymax) <
           std::tie(b.xmin, b.ymin, b.xmax, b.ymax);
}

// Running max over offered rectangles, count taken against the full set.
// Equal counts keep the lexicographically smallest rectangle so the result
// does not depend on recursion order.
struct KappaSearch {
    const CountStructure* counts = nullptr;
    double alpha = 0.0;
    bool has = false;
    KappaResult best;

    void offer(const Rect& r) {
        int c = counts->count(r);
        if (!has || c > best.kappa || (c == best.kappa && rect_lex_less(r, best.witness))) {
            has = true;
            best = KappaResult{c, r};
        }
    }
};

void kappa_node(std::vector<Point> pts, KappaSearch& s) {
    if (pts.size() == 1) {
        // Degenerate fit: an area-alpha square cornered at the point.
        double side = std::sqrt(s.alpha);
        const Point& p = pts.front();
        s.offer(shrink_to_fit(Rect{p.x, p.x + side, p.y, p.y + side}, s.alpha,
                              false, true));
        return;
    }
    PointSet sub{std::move(pts)};
    std::optional<SplitLine> ell = detail::try_split(sub);
    if (!ell) {
        // One shared y: a thin rectangle over the whole x-span covers every
        // point of the subset; offer both vertical directions.
        double y = sub[0].y;
        Rect bb = bbox(sub);
        double h = s.alpha / (bb.xmax - bb.xmin);
        s.offer(shrink_to_fit(Rect{bb.xmin, bb.xmax, y, y + h}, s.alpha, false, true));
        s.offer(shrink_to_fit(Rect{bb.xmin, bb.xmax, y - h, y}, s.alpha, false, false));
        return;
    }
    std::vector<Point> above, below;
    for (const Point& p : sub) {
        s.offer(anchored_pair(p, ell->y, s.alpha, true));
        s.offer(anchored_pair(p, ell->y, s.alpha, false));
        (p.y > ell->y ? above : below).push_back(p);
    }
    kappa_node(std::move(above), s);
    kappa_node(std::move(below), s);
}

}  // namespace

CandidateRects candidate_rects(const PointSet& ps, SplitLine ell, double alpha) {
    check_alpha(alpha);
    CandidateRects out;
    out.rects.reserve(2 * ps.size());
    for (const Point& p : ps) {
        if (p.y == ell.y)
            throw std::invalid_argument("candidate_rects: point on the split line");
        out.rects.push_back(anchored_pair(p, ell.y, alpha, true));
        out.rects.push_back(anchored_pair(p, ell.y, alpha, false));
    }
    return out;
}

KappaResult kappa(const PointSet& ps, double alpha) {
    check_alpha(alpha);
    if (ps.empty()) throw std::invalid_argument("kappa: need at least one point");
    CountStructure counts(ps);
    KappaSearch s;
    s.counts = &counts;
    s.alpha = alpha;
    kappa_node({ps.begin(), ps.end()}, s);
    return s.best;
}

AreaResult max_points_exact(const PointSet& ps, double alpha) {
    check_alpha(alpha);
    if (ps.empty()) throw std::invalid_argument("max_points_exact: need at least one point");
    int n = static_cast<int>(ps.size());
    KappaResult ka = kappa(ps, alpha);
    // kappa's witness has area <= alpha and covers kappa points, so lo is
    // feasible; the optimum is at most 4*kappa.
    int lo = ka.kappa;
    int hi = std::min(4 * ka.kappa, n);
    AreaResult best = min_area_leq(ps, lo, alpha);
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        AreaResult probe = min_area_leq(ps, mid, alpha);
        if (probe.feasible()) {
            lo = mid;
            best = probe;
        } else {
            hi = mid - 1;
        }
    }
    best.count = lo;
    return best;
}

}  // namespace krect
