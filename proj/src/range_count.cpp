#include "krect/range_count.hpp"

#include <algorithm>

namespace krect {

CountStructure::CountStructure(const PointSet& ps) : n_(static_cast<int>(ps.size())) {
    if (n_ == 0) return;
    xs_.reserve(n_);
    ys_.assign(2 * static_cast<size_t>(n_), {});
    for (int rank = 0; rank < n_; ++rank) {
        const Point& p = ps[ps.order_x()[rank]];
        xs_.push_back(p.x);
        ys_[static_cast<size_t>(n_) + rank] = {p.y};
    }
    for (int node = n_ - 1; node >= 1; --node) {
        const auto& a = ys_[2 * static_cast<size_t>(node)];
        const auto& b = ys_[2 * static_cast<size_t>(node) + 1];
        auto& out = ys_[node];
        out.resize(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
    }
}

int CountStructure::count(const Rect& r) const {
    if (n_ == 0 || r.xmin > r.xmax || r.ymin > r.ymax) return 0;
    // Contiguous x-rank window of the closed x-range.
    size_t lo = std::lower_bound(xs_.begin(), xs_.end(), r.xmin) - xs_.begin();
    size_t hi = std::upper_bound(xs_.begin(), xs_.end(), r.xmax) - xs_.begin();
    int total = 0;
    auto add = [&](const std::vector<double>& ys) {
        total += static_cast<int>(std::upper_bound(ys.begin(), ys.end(), r.ymax) -
                                  std::lower_bound(ys.begin(), ys.end(), r.ymin));
    };
    for (size_t l = lo + n_, h = hi + n_; l < h; l >>= 1, h >>= 1) {
        if (l & 1) add(ys_[l++]);
        if (h & 1) add(ys_[--h]);
    }
    return total;
}

}  // namespace krect
