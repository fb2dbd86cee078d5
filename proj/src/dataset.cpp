#include "krect/dataset.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace krect {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

double u01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Sum of four uniforms, centered: bell-shaped, bounded, cheap.
double normalish(std::mt19937_64& g) {
    return (u01(g) + u01(g) + u01(g) + u01(g) - 2.0) * 0.5;
}

PointSet gen_dedup(int n, std::uint64_t seed,
                   double (*draw_x)(std::mt19937_64&),
                   double (*draw_y)(std::mt19937_64&)) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::mt19937_64 g(seed);
    std::map<std::pair<double, double>, int> seen;
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        double x = draw_x(g);
        double y = draw_y(g);
        if (!seen.emplace(std::make_pair(x, y), 0).second) continue;
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet{std::move(pts)};
}

}  // namespace

PointSet read_points(std::istream& in) {
    std::vector<Point> pts;
    std::map<std::pair<double, double>, int> first_line;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;
        std::istringstream ls(line.substr(i));
        double x = 0.0, y = 0.0;
        if (!(ls >> x >> y)) fail(line_no, "expected two numbers");
        std::string rest;
        if (ls >> rest) fail(line_no, "unexpected trailing content '" + rest + "'");
        if (!std::isfinite(x) || !std::isfinite(y))
            fail(line_no, "non-finite coordinate");
        auto [it, fresh] = first_line.emplace(std::make_pair(x, y), line_no);
        if (!fresh) {
            std::ostringstream msg;
            msg << "duplicate point (" << x << ", " << y << ") on lines "
                << it->second << " and " << line_no;
            throw std::runtime_error(msg.str());
        }
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet{std::move(pts)};
}

PointSet read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    try {
        return read_points(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_points(std::ostream& out, const PointSet& ps) {
    char buf[64];
    for (const Point& p : ps) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
        out << buf;
    }
}

void write_points_file(const std::string& path, const PointSet& ps) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_points(out, ps);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

PointSet gen_uniform(int n, std::uint64_t seed) {
    return gen_dedup(n, seed, u01, u01);
}

PointSet gen_clusters(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::mt19937_64 g(seed);
    std::map<std::pair<double, double>, int> seen;
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    // Three blobs with distinct spreads so optima land at different scales.
    const double cx[3] = {0.25, 0.70, 0.45};
    const double cy[3] = {0.30, 0.60, 0.85};
    const double sx[3] = {0.030, 0.090, 0.015};
    const double sy[3] = {0.045, 0.060, 0.012};
    while (static_cast<int>(pts.size()) < n) {
        double pick = u01(g);
        int b = pick < 0.45 ? 0 : pick < 0.80 ? 1 : 2;
        double x = cx[b] + sx[b] * normalish(g);
        double y = cy[b] + sy[b] * normalish(g);
        if (!seen.emplace(std::make_pair(x, y), 0).second) continue;
        pts.push_back({x, y, static_cast<int>(pts.size())});
    }
    return PointSet{std::move(pts)};
}

}  // namespace krect
