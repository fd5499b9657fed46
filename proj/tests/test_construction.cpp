#include "doctest.h"
#include "shulga/construction.hpp"

using namespace shulga;

TEST_CASE("the first digit pairs") {
    ConstructionState s = construct(8);
    CHECK(s.b == std::vector<Integer>{2, 6, 11, 16, 21, 26, 30, 34});
    CHECK(s.c == std::vector<Integer>{4, 9, 14, 19, 24, 28, 32, 36});
    CHECK(s.size() == 8);
    CHECK_THROWS_AS(construct(0), std::domain_error);

    SUBCASE("extend is incremental") {
        ConstructionState t = construct(1);
        for (int i = 0; i < 7; ++i) extend(t);
        CHECK(t.b == s.b);
        CHECK(t.c == s.c);
    }
}

TEST_CASE("candidate selection is recorded") {
    ConstructionState s = construct(3);
    REQUIRE(s.selections.size() == 2);

    // step 2: candidates 8 and 9; q_2 = 13, and 8 overshoots the window
    // (8*169 - 33^2 = 263 >= 169), so the high candidate is taken
    const auto& sel = s.selections[0];
    CHECK(sel.c_low == 8);
    CHECK(sel.t_low == 33);
    CHECK(sel.c_high == 9);
    CHECK(sel.t_high == 37);
    CHECK(sel.taken == 3);
    CHECK(s.beta_table.q(2) == 13);
    CHECK(s.gamma_table.q(2) == 37);

    // step 3: both candidates miss the window; the rule still takes the high
    // one, and the window check later reports the miss
    CHECK(s.selections[1].c_low == 13);
    CHECK(s.selections[1].taken == 3);
    CHECK(s.c[2] == 14);
}

TEST_CASE("window verification is reported, not assumed") {
    ConstructionState s = construct(40);
    CheckFlag w = verify_window(s);
    CHECK_FALSE(w.ok);
    CHECK(w.witness == "n=3: c_n q_n^2 - t_n^2 = 21866, q_n^2 = 21025");

    SUBCASE("every index other than 3 satisfies the window") {
        for (std::size_t n = 2; n <= s.size(); ++n) {
            if (n == 3) continue;
            const Integer& q = s.beta_table.q(n);
            const Integer& t = s.gamma_table.q(n);
            Integer margin = s.c[n - 1] * q * q - t * t;
            INFO("n=" << n);
            CHECK(margin > 0);
            CHECK(margin < q * q);
        }
    }
}

TEST_CASE("nesting and growth bounds hold") {
    ConstructionState s = construct(60);
    CHECK(verify_nesting(s).ok);
    CHECK(verify_growth_bounds(s).ok);
}

TEST_CASE("a point of the deepest region reproduces the digits") {
    ConstructionState s = construct(40);
    Rational w = witness_point(s);
    DecompositionResult r = decompose(w, 40);
    REQUIRE(r.steps == 40);
    CHECK(r.b == s.b);
    CHECK(r.c == s.c);
}

TEST_CASE("stream views of the two tails") {
    ConstructionState s = construct(12);
    auto [beta, gamma] = as_real_inputs(s);
    CHECK(beta.digits == s.b);
    CHECK(gamma.digits == s.c);
    CHECK(beta.budget == 12);
    CHECK(*partial_quotient(RealInput(gamma), 5) == s.c[4]);
}

TEST_CASE("csv emission") {
    ConstructionState s = construct(3);
    CHECK(construction_csv_header() == "n,b,c,taken,window_margin,q_sq,b_slack,c_slack");
    CHECK(construction_csv_row(s, 1) == "1,2,4,0,0,4,0,1");
    CHECK(construction_csv_row(s, 2) == "2,6,9,3,152,169,0,1");
    CHECK(construction_csv_row(s, 3) == "3,11,14,3,21866,21025,1,1");
    CHECK_THROWS_AS(construction_csv_row(s, 4), std::out_of_range);
}
