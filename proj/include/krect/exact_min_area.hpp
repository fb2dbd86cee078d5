#pragma once

// Exact minimum-area k-enclosing rectangle via divide and conquer on a
// horizontal split line. Each node owns per-point candidate sets Q_p of at
// most 4k points; the optimum either crosses the node's line (then some
// anchored subproblem over a Q_p attains it) or lives in one half.

#include <memory>
#include <optional>
#include <vector>

#include "krect/geometry.hpp"

namespace krect {

struct SplitLine {
    double y = 0.0;
};

namespace detail {

// choose_split without the error path: nullopt when no gap between adjacent
// distinct y values admits a double strictly between them.
std::optional<SplitLine> try_split(const PointSet& ps);

}  // namespace detail

// Per-point candidate sets for one node. Members are stored as indices into
// the owning point set, presorted in both coordinate orders so the anchored
// solver can run without sorting.
struct QSets {
    int k = 0;                            // budget the sets were built for
    std::vector<std::vector<int>> by_x;   // per point: members in (x, id) order
    std::vector<std::vector<int>> by_y;   // same members in (y, id) order
};

// Horizontal line with at most half the points on each side, through the
// widest-balanced gap between adjacent distinct y values; never through a
// point. Errors when no separating gap exists (fewer than 2 points, or all
// points share one y).
SplitLine choose_split(const PointSet& ps);

// For each p: the k east-most and k west-most points inside the slab between
// ell and p's horizontal line, plus the same for p mirrored across ell, plus
// p itself. Four sweep passes; |Q_p| <= 4k.
QSets build_qsets(const PointSet& ps, SplitLine ell, int k);

// V(ps, ell, k') = min over p of the anchored optimum over Q_p. Always an
// upper bound for the global optimum; equal to it whenever some optimal
// rectangle crosses ell.
AreaResult merge_value(const PointSet& ps, SplitLine ell, int k_prime, const QSets& qsets);

struct DCNode {
    PointSet pts;
    SplitLine ell{};
    QSets qsets;                   // empty for leaves
    std::unique_ptr<DCNode> above;
    std::unique_ptr<DCNode> below;
    bool leaf = false;
};

struct DCTree {
    std::unique_ptr<DCNode> root;
    int k = 0;  // max supported query size
};

// Build the recursion tree with budget k; queries then answer any k' <= k.
DCTree preprocess(const PointSet& ps, int k);

// Exact minimum area rectangle covering >= k' points, with witness.
AreaResult query(const DCTree& tree, int k_prime);

// Decision variant: some rectangle with >= k' points and area <= alpha, or
// infeasible exactly when none exists. Returns the first witness found, not
// a minimal one; much faster than query on feasible instances.
AreaResult query_leq(const DCTree& tree, int k_prime, double alpha);

// One-shot: same value and witness as preprocess(ps, k) + query(tree, k),
// without retaining the tree.
AreaResult min_area_rect(const PointSet& ps, int k);

// One-shot decision: feasible iff some axis-parallel rectangle of area
// <= alpha covers at least k points. A feasible result carries such a
// witness (not necessarily the minimum-area one); infeasible means the
// k-point optimum exceeds alpha. Memory stays transient, so this scales
// to budgets where retaining a tree would not.
AreaResult min_area_leq(const PointSet& ps, int k, double alpha);

}  // namespace krect
