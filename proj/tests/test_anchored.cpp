#include "krect/anchored.hpp"

#include <stdexcept>

#include "doctest.h"
#include "krect/oracle.hpp"
#include "test_support.hpp"

using namespace krect;
using namespace krect::testsupport;

namespace {

const Point kStairQ{0, 3, 0};

PointSet staircase_q() {
    return PointSet{{kStairQ, {1, 2, 1}, {2, 1, 2}, {3, 0, 3}}};
}

}  // namespace

TEST_CASE("phi_one_side frozen staircase values") {
    PointSet q_set = staircase_q();

    AreaResult top2 = phi_one_side(q_set, kStairQ, 2, Side::top);
    CHECK(top2.area == 1.0);
    CHECK(*top2.rect == Rect{0, 1, 2, 3});
    CHECK(top2.count == 2);

    CHECK(phi_one_side(q_set, kStairQ, 1, Side::top).area == 0.0);
    CHECK(phi_one_side(q_set, kStairQ, 3, Side::top).area == 4.0);

    AreaResult top4 = phi_one_side(q_set, kStairQ, 4, Side::top);
    CHECK(top4.area == 9.0);
    CHECK(*top4.rect == Rect{0, 3, 0, 3});

    // q is the highest point, so its upper side holds only q itself.
    CHECK(!phi_one_side(q_set, kStairQ, 2, Side::bottom).feasible());
    CHECK(phi_one_side(q_set, kStairQ, 1, Side::bottom).area == 0.0);
}

TEST_CASE("phi basic contracts") {
    PointSet q_set = staircase_q();
    CHECK(phi(q_set, kStairQ, 2).area == 1.0);
    CHECK(phi(q_set, kStairQ, 4).area == 9.0);
    // k beyond |Q| is infeasible, not an error.
    CHECK(!phi(q_set, kStairQ, 5).feasible());

    Point q{0, 0, 0};
    PointSet two{{q, {1, 2, 1}}};
    CHECK(!phi_one_side(two, q, 2, Side::top).feasible());
    AreaResult both = phi(two, q, 2);
    CHECK(both.area == 2.0);
    CHECK(*both.rect == Rect{0, 1, 0, 2});

    PointSet lone{{q}};
    AreaResult single = phi_one_side(lone, q, 1, Side::top);
    CHECK(single.area == 0.0);
    CHECK(*single.rect == Rect{0, 0, 0, 0});

    CHECK_THROWS_AS(phi(q_set, Point{9, 9, 77}, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi(q_set, kStairQ, 0), std::invalid_argument);
}

TEST_CASE("phi_all_k shape and values") {
    PointSet q_set = staircase_q();
    std::vector<AreaResult> all = phi_all_k(q_set, kStairQ);
    REQUIRE(all.size() == 4);
    CHECK(all[0].area == 0.0);
    CHECK(all[1].area == 1.0);
    CHECK(all[2].area == 4.0);
    CHECK(all[3].area == 9.0);

    Point q{5, 5, 0};
    PointSet lone{{q}};
    std::vector<AreaResult> one = phi_all_k(lone, q);
    REQUIRE(one.size() == 1);
    CHECK(one[0].area == 0.0);
}

TEST_CASE("phi matches the anchored oracle per side on random and tied sets") {
    int checked = 0;
    for (unsigned seed = 1; seed <= 6; ++seed) {
        int n = 5 + static_cast<int>(seed);
        PointSet ps = seed % 2 == 0 ? random_gridlike(n, seed)
                                    : random_uniform(n, seed);
        for (size_t qi = 0; qi < ps.size(); ++qi) {
            const Point& q = ps[qi];
            for (int k = 1; k <= n; ++k) {
                for (Side side : {Side::top, Side::bottom}) {
                    AreaResult fast = phi_one_side(ps, q, k, side);
                    AreaResult ref = oracle_phi_one_side(ps, q, k, side == Side::top);
                    REQUIRE(fast.feasible() == ref.feasible());
                    if (fast.feasible()) {
                        REQUIRE(fast.area == ref.area);
                        const Rect& r = *fast.rect;
                        CHECK(r.area() == fast.area);
                        CHECK(r.xmin <= q.x);
                        CHECK(q.x <= r.xmax);
                        CHECK((side == Side::top ? r.ymax : r.ymin) == q.y);
                        CHECK(fast.count == count_in(ps, r));
                        CHECK(fast.count >= k);
                    }
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("phi dominates the unrestricted optimum") {
    for (unsigned seed = 11; seed <= 13; ++seed) {
        PointSet ps = random_uniform(10, seed);
        for (size_t qi = 0; qi < ps.size(); qi += 3)
            for (int k = 1; k <= 10; ++k) {
                AreaResult anchored = phi(ps, ps[qi], k);
                AreaResult global = oracle_min_area(ps, k);
                if (anchored.feasible()) CHECK(anchored.area >= global.area);
            }
    }
}

TEST_CASE("phi_anchored pruning and early exit keep exact semantics") {
    PointSet ps = random_uniform(12, 99);
    detail::PhiScratch scratch;
    const Point& q = ps[4];
    for (int k = 2; k <= 8; ++k) {
        AreaResult full = detail::phi_anchored(ps.points(), ps.order_x(), ps.order_y(),
                                               q, k, Side::top, kInfArea, -kInfArea,
                                               scratch);
        if (!full.feasible()) continue;

        // Pruning at exactly the optimum keeps it; anything tighter kills it.
        AreaResult at = detail::phi_anchored(ps.points(), ps.order_x(), ps.order_y(),
                                             q, k, Side::top, full.area, -kInfArea,
                                             scratch);
        CHECK(at.area == full.area);
        if (full.area > 0) {
            AreaResult below = detail::phi_anchored(ps.points(), ps.order_x(),
                                                    ps.order_y(), q, k, Side::top,
                                                    full.area * 0.999999, -kInfArea,
                                                    scratch);
            CHECK(!below.feasible());
        }

        // Early exit returns some witness no worse than the threshold.
        AreaResult quick = detail::phi_anchored(ps.points(), ps.order_x(), ps.order_y(),
                                                q, k, Side::top, kInfArea,
                                                full.area * 4 + 1, scratch);
        REQUIRE(quick.feasible());
        CHECK(quick.area <= full.area * 4 + 1);
        CHECK(quick.count >= k);
        CHECK(quick.count == count_in(ps, *quick.rect));
    }
}
