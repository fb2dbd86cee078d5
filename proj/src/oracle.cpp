#include "krect/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace krect {

namespace {

void check_k(const PointSet& ps, int k, const char* who) {
    if (k < 1 || static_cast<size_t>(k) > ps.size())
        throw std::invalid_argument(std::string(who) + ": k out of range");
}

// Suffix-min: a rectangle covering c points is feasible for every k <= c.
void roll_down(std::vector<AreaResult>& best) {
    for (size_t k = best.size() - 1; k-- > 0;)
        best[k] = min_result(best[k], best[k + 1]);
}

void recount(std::vector<AreaResult>& best, const PointSet& ps) {
    for (AreaResult& r : best)
        if (r.feasible()) r.count = count_in(ps, *r.rect);
}

// Distinct x coordinates, ascending.
std::vector<double> distinct_xs(const PointSet& ps) {
    std::vector<double> xs;
    xs.reserve(ps.size());
    for (int i : ps.order_x()) xs.push_back(ps[i].x);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void consider(std::vector<AreaResult>& best, int k, const Rect& r) {
    AreaResult cand{r.area(), r, 0};
    if (tighter(cand, best[k - 1])) best[k - 1] = cand;
}

}  // namespace

std::vector<AreaResult> oracle_min_area_table(const PointSet& ps) {
    if (ps.empty()) throw std::invalid_argument("oracle_min_area_table: empty point set");
    const size_t n = ps.size();
    std::vector<AreaResult> best(n);
    const std::vector<double> xs = distinct_xs(ps);
    std::vector<Point> slab;
    slab.reserve(n);
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i; j < xs.size(); ++j) {
            const double xmin = xs[i], xmax = xs[j];
            slab.clear();
            for (int idx : ps.order_y()) {
                const Point& p = ps[idx];
                if (xmin <= p.x && p.x <= xmax) slab.push_back(p);
            }
            for (size_t t = 0; t < slab.size(); ++t) {
                for (size_t e = t; e < slab.size(); ++e) {
                    const int k = static_cast<int>(e - t + 1);
                    consider(best, k, Rect{xmin, xmax, slab[t].y, slab[e].y});
                }
            }
        }
    }
    roll_down(best);
    recount(best, ps);
    return best;
}

AreaResult oracle_min_area(const PointSet& ps, int k) {
    check_k(ps, k, "oracle_min_area");
    return oracle_min_area_table(ps)[k - 1];
}

std::vector<AreaResult> oracle_min_area_crossing_table(const PointSet& ps, double ell_y) {
    if (ps.empty())
        throw std::invalid_argument("oracle_min_area_crossing_table: empty point set");
    const size_t n = ps.size();
    std::vector<AreaResult> best(n);
    const std::vector<double> xs = distinct_xs(ps);
    std::vector<Point> slab;
    slab.reserve(n);
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i; j < xs.size(); ++j) {
            const double xmin = xs[i], xmax = xs[j];
            slab.clear();
            for (int idx : ps.order_y()) {
                const Point& p = ps[idx];
                if (xmin <= p.x && p.x <= xmax) slab.push_back(p);
            }
            // Windows whose own span already crosses the line.
            for (size_t t = 0; t < slab.size(); ++t) {
                for (size_t e = t; e < slab.size(); ++e) {
                    if (slab[t].y <= ell_y && ell_y <= slab[e].y) {
                        const int k = static_cast<int>(e - t + 1);
                        consider(best, k, Rect{xmin, xmax, slab[t].y, slab[e].y});
                    }
                }
            }
            // One y-edge on the line: [ell_y, y_e] holds everything in the
            // slab with ell_y <= y <= y_e, symmetrically below.
            size_t at_or_above = 0;
            while (at_or_above < slab.size() && slab[at_or_above].y < ell_y) ++at_or_above;
            for (size_t e = at_or_above; e < slab.size(); ++e) {
                const int k = static_cast<int>(e - at_or_above + 1);
                consider(best, k, Rect{xmin, xmax, ell_y, slab[e].y});
            }
            size_t past_line = 0;
            while (past_line < slab.size() && slab[past_line].y <= ell_y) ++past_line;
            for (size_t t = 0; t < past_line; ++t) {
                const int k = static_cast<int>(past_line - t);
                consider(best, k, Rect{xmin, xmax, slab[t].y, ell_y});
            }
        }
    }
    roll_down(best);
    recount(best, ps);
    return best;
}

AreaResult oracle_min_area_crossing(const PointSet& ps, double ell_y, int k) {
    check_k(ps, k, "oracle_min_area_crossing");
    return oracle_min_area_crossing_table(ps, ell_y)[k - 1];
}

AreaResult oracle_max_points(const PointSet& ps, double alpha) {
    if (ps.empty()) throw std::invalid_argument("oracle_max_points: empty point set");
    if (!(alpha >= 0.0)) throw std::invalid_argument("oracle_max_points: alpha must be >= 0");
    const std::vector<AreaResult> table = oracle_min_area_table(ps);
    // table[0].area == 0 <= alpha, so at least k = 1 qualifies.
    size_t k = 1;
    while (k < table.size() && table[k].area <= alpha) ++k;
    return table[k - 1];
}

AreaResult oracle_phi_one_side(const PointSet& q_set, const Point& q, int k, bool side_top) {
    if (k < 1) throw std::invalid_argument("oracle_phi_one_side: k must be >= 1");
    bool member = false;
    for (const Point& p : q_set)
        if (p == q) member = true;
    if (!member) throw std::invalid_argument("oracle_phi_one_side: q not in set");

    std::vector<Point> side;
    for (const Point& p : q_set)
        if (side_top ? p.y <= q.y : p.y >= q.y) side.push_back(p);

    std::vector<double> xs, ys;
    for (const Point& p : side) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    AreaResult best = AreaResult::infeasible();
    for (double xmin : xs) {
        if (xmin > q.x) continue;
        for (double xmax : xs) {
            if (xmax < q.x || xmax < xmin) continue;
            for (double yedge : ys) {
                Rect r = side_top ? Rect{xmin, xmax, yedge, q.y} : Rect{xmin, xmax, q.y, yedge};
                if (r.ymin > r.ymax) continue;
                if (count_in(q_set, r) >= k) {
                    AreaResult cand{r.area(), r, 0};
                    if (tighter(cand, best)) best = cand;
                }
            }
        }
    }
    if (best.feasible()) best.count = count_in(q_set, *best.rect);
    return best;
}

AreaResult oracle_phi(const PointSet& q_set, const Point& q, int k) {
    return min_result(oracle_phi_one_side(q_set, q, k, true),
                      oracle_phi_one_side(q_set, q, k, false));
}

AreaResult oracle_min_area_subsets(const PointSet& ps, int k) {
    check_k(ps, k, "oracle_min_area_subsets");
    if (ps.size() > 20) throw std::invalid_argument("oracle_min_area_subsets: too large");
    const int n = static_cast<int>(ps.size());
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    AreaResult best = AreaResult::infeasible();
    std::vector<Point> sub;
    while (true) {
        sub.clear();
        for (int i : pick) sub.push_back(ps[i]);
        Rect r = bbox(std::span<const Point>(sub));
        AreaResult cand{r.area(), r, 0};
        if (tighter(cand, best)) best = cand;
        // Next k-combination in lexicographic order.
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
    if (best.feasible()) best.count = count_in(ps, *best.rect);
    return best;
}

}  // namespace krect
