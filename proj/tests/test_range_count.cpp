#include "krect/range_count.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace krect;
using namespace krect::testsupport;

TEST_CASE("count structure handles empty and single-point sets") {
    CountStructure none;
    CHECK(none.count(Rect{-1e9, 1e9, -1e9, 1e9}) == 0);

    PointSet one{{{2, 3, 0}}};
    CountStructure cs(one);
    CHECK(cs.count(Rect{0, 5, 0, 5}) == 1);
    CHECK(cs.count(Rect{2, 2, 3, 3}) == 1);
    CHECK(cs.count(Rect{0, 1.9, 0, 5}) == 0);
    CHECK(cs.count(Rect{0, 5, 3.5, 5}) == 0);
}

TEST_CASE("count structure matches the linear scan on random batteries") {
    for (unsigned seed = 1; seed <= 3; ++seed) {
        PointSet ps = seed == 3 ? random_gridlike(400, seed) : random_uniform(1000, seed);
        CountStructure cs(ps);
        std::mt19937_64 g(seed * 101);
        int agree = 0;
        for (int t = 0; t < 500; ++t) {
            double x1 = u01(g) * 1.2 - 0.1, x2 = u01(g) * 1.2 - 0.1;
            double y1 = u01(g) * 1.2 - 0.1, y2 = u01(g) * 1.2 - 0.1;
            Rect r{std::min(x1, x2), std::max(x1, x2), std::min(y1, y2), std::max(y1, y2)};
            REQUIRE(cs.count(r) == count_in(ps, r));
            ++agree;
        }
        CHECK(agree == 500);
        // Boundary-sensitive probes: rect edges exactly on point coordinates.
        for (size_t i = 0; i < ps.size(); i += 7) {
            Rect r{ps[i].x, ps[i].x, ps[i].y, ps[i].y};
            REQUIRE(cs.count(r) == count_in(ps, r));
            Rect wide{ps[i].x, ps[(i + 13) % ps.size()].x, ps[i].y,
                      ps[(i + 13) % ps.size()].y};
            if (wide.xmin <= wide.xmax && wide.ymin <= wide.ymax)
                REQUIRE(cs.count(wide) == count_in(ps, wide));
        }
    }
}

TEST_CASE("counts add up over a 2x2 partition avoiding point coordinates") {
    PointSet ps = random_uniform(300, 42);
    CountStructure cs(ps);
    // Coordinates are irrational-looking uniform draws; 0.5 +/- eps split
    // lines cannot hit them exactly with probability 1, and these seeds don't.
    double mx = 0.512345, my = 0.487654;
    Rect all{0.1, 0.9, 0.1, 0.9};
    int whole = cs.count(all);
    int q1 = cs.count(Rect{all.xmin, mx, all.ymin, my});
    int q2 = cs.count(Rect{std::nextafter(mx, 1.0), all.xmax, all.ymin, my});
    int q3 = cs.count(Rect{all.xmin, mx, std::nextafter(my, 1.0), all.ymax});
    int q4 = cs.count(Rect{std::nextafter(mx, 1.0), all.xmax, std::nextafter(my, 1.0),
                           all.ymax});
    CHECK(whole == q1 + q2 + q3 + q4);
    CHECK(whole == count_in(ps, all));
}
