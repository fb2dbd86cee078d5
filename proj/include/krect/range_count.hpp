#pragma once

// Static orthogonal range counting: how many points fall in a closed
// rectangle. Merge-sort tree over the (x, id) order with y-sorted node
// arrays; build O(n log n), query O(log^2 n).

#include <vector>

#include "krect/geometry.hpp"

namespace krect {

class CountStructure {
public:
    CountStructure() = default;  // empty set, counts 0 everywhere
    explicit CountStructure(const PointSet& ps);

    int count(const Rect& r) const;
    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<double> xs_;                // x coordinates in (x, id) order
    std::vector<std::vector<double>> ys_;   // 2n-node segment tree of sorted y
};

}  // namespace krect
