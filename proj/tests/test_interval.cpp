#include <random>

#include "doctest.h"
#include "shulga/interval.hpp"

using namespace shulga;

TEST_CASE("oriented intervals carry their included end") {
    OrientedInterval even{make_rational(6, 13), make_rational(7, 15)};  // [6/13, 7/15)
    CHECK(even.lo() == make_rational(6, 13));
    CHECK(even.contains(make_rational(6, 13)));
    CHECK_FALSE(even.contains(make_rational(7, 15)));
    CHECK(even.str() == "[6/13, 7/15)");

    OrientedInterval odd{make_rational(1, 2), make_rational(1, 3)};  // (1/3, 1/2]
    CHECK(odd.lo() == make_rational(1, 3));
    CHECK(odd.contains(make_rational(1, 2)));
    CHECK_FALSE(odd.contains(make_rational(1, 3)));
    CHECK(odd.str() == "(1/3, 1/2]");

    OrientedInterval moved = shift(odd, Rational(1));
    CHECK(moved.included_end == make_rational(3, 2));
}

TEST_CASE("cylinders") {
    OrientedInterval c1 = cylinder({Integer(2)});
    CHECK(c1.included_end == make_rational(1, 2));
    CHECK(c1.excluded_end == make_rational(1, 3));

    OrientedInterval c2 = cylinder({Integer(2), Integer(6)});
    CHECK(c2.included_end == make_rational(6, 13));
    CHECK(c2.excluded_end == make_rational(7, 15));

    CHECK_THROWS_AS(cylinder({}), std::domain_error);
}

TEST_CASE("region intersection") {
    Region u = Region::unit();
    CHECK(u.contains(Rational(0)));
    CHECK(u.contains(Rational(1)));

    Region a = Region::of({make_rational(1, 2), make_rational(1, 3)});  // (1/3, 1/2]
    CHECK_FALSE(a.lo_in);
    CHECK(a.hi_in);

    SUBCASE("overlap keeps the tighter flags") {
        Region b = Region::of({make_rational(1, 3), make_rational(2, 5)});  // [1/3, 2/5)
        auto r = intersect(a, b);
        REQUIRE(r);
        CHECK(r->lo == make_rational(1, 3));
        CHECK_FALSE(r->lo_in);  // excluded by a even though b includes it
        CHECK(r->hi == make_rational(2, 5));
        CHECK_FALSE(r->hi_in);
    }
    SUBCASE("touching at a doubly included point leaves that point") {
        Region b{make_rational(1, 2), Rational(1), true, true};
        auto r = intersect(a, b);
        REQUIRE(r);
        CHECK(r->lo == r->hi);
        CHECK(r->lo == make_rational(1, 2));
    }
    SUBCASE("touching at a half-open point is empty") {
        Region b{make_rational(1, 2), Rational(1), false, true};
        CHECK_FALSE(intersect(a, b));
    }
    SUBCASE("disjoint is empty") {
        Region b{make_rational(3, 5), Rational(1), true, true};
        CHECK_FALSE(intersect(a, b));
        CHECK_FALSE(intersect(std::nullopt, b));
    }
    SUBCASE("containment respects flags") {
        CHECK(u.contains(a));
        Region open{Rational(0), Rational(1), false, false};
        CHECK_FALSE(open.contains(u));
        CHECK(u.contains(open));
    }
}

TEST_CASE("quadratic membership") {
    QuadraticIrrational x(-1, 2, 1);  // sqrt(2)-1
    Region r{make_rational(2, 5), make_rational(1, 2), true, false};
    CHECK(r.contains(x));
    Region below{Rational(0), make_rational(2, 5), true, true};
    CHECK_FALSE(below.contains(x));
}

// State visited by a terminating run: b=(2,2,3,5), c=(2,3,4,8).
static const DigitPrefix kPrefix{{2, 2, 3, 5}, {2, 3, 4, 8}};

TEST_CASE("staggered intervals of a visited state") {
    CHECK(b_interval(kPrefix, 1).str() == "(1/2, 1]");
    CHECK(c_interval(kPrefix, 1).str() == "(5/6, 1]");
    CHECK(b_interval(kPrefix, 2).str() == "[5/6, 9/10)");
    CHECK(c_interval(kPrefix, 2).str() == "[29/35, 38/45)");
    CHECK_THROWS_AS(b_interval(kPrefix, 5), std::out_of_range);

    Rational alpha = make_rational(18769, 22230);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto r = feasible_region(kPrefix, n);
        REQUIRE(r);
        CHECK(r->contains(alpha));
    }

    SUBCASE("staggered region accepts a trailing b digit") {
        DigitPrefix odd{{2, 2, 3}, {2, 3}};
        auto r = staggered_region(odd);
        REQUIRE(r);
        CHECK(r->contains(alpha));
    }
}

TEST_CASE("integer criteria match the stated examples") {
    DigitPrefix p{{2, 2}, {2, 3}};
    CHECK(criterion_CnCn1(p));
    CHECK(criterion_BnCn(p));
    CHECK(criterion_BnCn1(p));
}

TEST_CASE("criteria agree with the geometry on random prefixes") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> len(1, 6), bdig(2, 12), cdig(1, 40);
    int checked_bncn = 0, checked_pair = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        std::size_t n = len(rng);
        DigitPrefix p;
        for (std::size_t i = 0; i < n; ++i) {
            p.b.push_back(bdig(rng));
            p.c.push_back(cdig(rng));
        }
        bool geom = intersect(Region::of(b_interval(p, n)), Region::of(c_interval(p, n)))
                        .has_value();
        REQUIRE(criterion_BnCn(p) == geom);
        ++checked_bncn;
        if (n >= 2) {
            bool geom_cc =
                intersect(Region::of(c_interval(p, n)), Region::of(c_interval(p, n - 1)))
                    .has_value();
            REQUIRE(criterion_CnCn1(p) == geom_cc);
            bool geom_bc =
                intersect(Region::of(b_interval(p, n)), Region::of(c_interval(p, n - 1)))
                    .has_value();
            REQUIRE(criterion_BnCn1(p) == geom_bc);
            ++checked_pair;
        }
    }
    CHECK(checked_bncn == 100000);
    CHECK(checked_pair > 50000);
}

TEST_CASE("nonempty region implies the pairwise criteria") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(1, 5), bdig(2, 9), cdig(1, 30);
    int nonempty = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        std::size_t n = len(rng);
        DigitPrefix p;
        for (std::size_t i = 0; i < n; ++i) {
            p.b.push_back(bdig(rng));
            p.c.push_back(cdig(rng));
        }
        if (!feasible_region(p, n)) continue;
        ++nonempty;
        for (std::size_t k = 1; k <= n; ++k) {
            DigitPrefix head{{p.b.begin(), p.b.begin() + k}, {p.c.begin(), p.c.begin() + k}};
            REQUIRE(criterion_BnCn(head));
        }
    }
    CHECK(nonempty > 0);
}

TEST_CASE("lower bounds at a visited state") {
    CHECK(lower_bound_c(kPrefix, 2) == make_rational(9, 4));
    CHECK(lower_bound_b(kPrefix, 2) == 1);
    // the digits actually chosen clear both bounds
    CHECK(Rational(kPrefix.c[1]) > lower_bound_c(kPrefix, 2));
    CHECK(Rational(kPrefix.b[1]) > lower_bound_b(kPrefix, 2));
    CHECK_THROWS_AS(lower_bound_c(kPrefix, 1), std::out_of_range);
}

TEST_CASE("partition checks") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(partition_check(kPrefix, n));
    // a state with c far below b is not covered
    DigitPrefix small{{3}, {1}};
    CHECK_FALSE(partition_check(small, 1));
    CHECK_THROWS_AS(partition_check(kPrefix, 5), std::out_of_range);
}

TEST_CASE("a tampered digit empties the continuation") {
    DigitPrefix good{{2, 6, 11, 16}, {4, 9, 14, 19}};
    CHECK(feasible_region(good, 4));
    DigitPrefix bad = good;
    bad.c[2] = 13;  // one below the digit the selection rule picks
    CHECK(feasible_region(bad, 3));
    CHECK_FALSE(feasible_region(bad, 4));
}
