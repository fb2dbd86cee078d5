#pragma once

// Deterministic instance makers shared by the test binaries.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "krect/geometry.hpp"

namespace krect::testsupport {

inline double u01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

inline PointSet random_uniform(int n, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
    std::mt19937_64 g(seed);
    std::set<std::pair<double, double>> seen;
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        double x = lo + (hi - lo) * u01(g);
        double y = lo + (hi - lo) * u01(g);
        if (!seen.insert({x, y}).second) continue;
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet(std::move(pts));
}

// Two blobs of different spread; optima tend to sit inside one blob.
inline PointSet random_clustered(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    auto normalish = [&] {
        // Sum of uniforms, plenty for test geometry.
        return (u01(g) + u01(g) + u01(g) + u01(g) - 2.0) * 0.5;
    };
    std::set<std::pair<double, double>> seen;
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        double x, y;
        if (u01(g) < 0.6) {
            x = 0.3 + 0.08 * normalish();
            y = 0.4 + 0.05 * normalish();
        } else {
            x = 0.7 + 0.2 * normalish();
            y = 0.6 + 0.25 * normalish();
        }
        if (!seen.insert({x, y}).second) continue;
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet(std::move(pts));
}

// Coordinates on a small integer grid: many shared x and y values, so the
// (coordinate, id) tie paths actually run.
inline PointSet random_gridlike(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    const int side = std::max(3, static_cast<int>(std::sqrt(2.0 * n)) + 1);
    std::set<std::pair<double, double>> seen;
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        double x = static_cast<double>(g() % side);
        double y = static_cast<double>(g() % side);
        if (!seen.insert({x, y}).second) continue;
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet(std::move(pts));
}

// The four-point staircase used across the module examples.
inline PointSet staircase4() {
    return PointSet({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
}

}  // namespace krect::testsupport
