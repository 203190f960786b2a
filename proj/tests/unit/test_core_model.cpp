#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace arrexp;
using testutil::b2;

TEST_CASE("line forms normalize to coprime coefficients with positive lead",
          "[core_model]") {
    CHECK(LineForm::normalized(4, -6) == LineForm{2, -3});
    CHECK(LineForm::normalized(-1, 2) == LineForm{1, -2});
    CHECK(LineForm::normalized(0, -5) == LineForm{0, 1});
    CHECK_THROWS_AS(LineForm::normalized(0, 0), ZeroForm);

    SECTION("axis predicates") {
        CHECK(LineForm{1, 0}.is_x_axis());
        CHECK(LineForm{0, 1}.is_y_axis());
        CHECK_FALSE(LineForm{1, 1}.is_x_axis());
    }

    SECTION("slope of a x + b y is -b/a") {
        CHECK(LineForm{1, -2}.slope() == Rat(2));
        CHECK(LineForm{2, 1}.slope() == Rat(-1, 2));
        CHECK_THROWS_AS((LineForm{0, 1}.slope()), BadRange);
        CHECK(line_from_slope(Rat(3)) == LineForm{1, -3});
        CHECK(line_from_slope(Rat(-1, 2)) == LineForm{2, 1});
    }

    SECTION("display") {
        CHECK(LineForm{1, -1}.pretty() == "x-y");
        CHECK(LineForm{1, 2}.pretty() == "x+2y");
        CHECK(LineForm{0, 1}.pretty() == "y");
    }
}

TEST_CASE("arrangement construction validates input", "[core_model]") {
    Multiarrangement A = b2(2, 2, 1, 3);
    CHECK(A.n_lines() == 4);
    CHECK(A.size() == 8);
    CHECK(A.is_xy_normalized());
    CHECK(A.pretty() == "(x)^2(y)^2(x-y)(x+y)^3");

    SECTION("scaled duplicates collapse to the same line") {
        CHECK_THROWS_AS(
            normalize_arrangement({{1, 0}, {2, 0}}, {1, 1}), DuplicateLine);
        CHECK_THROWS_AS(
            normalize_arrangement({{1, -1}, {-2, 2}}, {1, 1}), DuplicateLine);
    }

    SECTION("multiplicities must be positive") {
        CHECK_THROWS_AS(normalize_arrangement({{1, 0}}, {0}), NonPositiveMult);
        CHECK_THROWS_AS(normalize_arrangement({{1, 0}}, {-2}), NonPositiveMult);
    }

    SECTION("shape errors") {
        CHECK_THROWS_AS(normalize_arrangement({}, {}), InvalidConfig);
        CHECK_THROWS_AS(normalize_arrangement({{1, 0}}, {1, 2}), InvalidConfig);
    }

    SECTION("index lookup works modulo scaling") {
        CHECK(A.index_of(LineForm{3, -3}) == 2);
        CHECK_THROWS_AS(A.index_of(LineForm{1, -7}), LineNotInArrangement);
    }
}

TEST_CASE("balance compares twice each multiplicity with the total",
          "[core_model]") {
    CHECK(is_balanced(b2(2, 2, 1, 3)));        // 2*3 < 8
    CHECK_FALSE(is_balanced(b2(1, 1, 1, 4)));  // 2*4 > 7
    CHECK_FALSE(is_balanced(b2(1, 1, 1, 3)));  // 2*3 = 6, strict
}

TEST_CASE("multiplicity bumps", "[core_model]") {
    Multiarrangement A = b2(2, 2, 1, 3);
    Multiarrangement up = add_delta_H(A, LineForm{1, -1}, +1);
    CHECK(up.mults == std::vector<long long>{2, 2, 2, 3});
    Multiarrangement down = add_delta_H(A, LineForm{1, 1}, -1);
    CHECK(down.mults == std::vector<long long>{2, 2, 1, 2});

    CHECK_THROWS_AS(add_delta_H(A, LineForm{1, -1}, -1), MultiplicityUnderflow);
    CHECK_THROWS_AS(add_delta_H(A, LineForm{1, 0}, 2), BadRange);
    CHECK_THROWS_AS(add_delta_H(A, LineForm{1, -9}, 1), LineNotInArrangement);
}

TEST_CASE("transforms act by substitution without division", "[core_model]") {
    Transform2 T{1, 1, 0, 1};
    CHECK(T.det() == Rat(1));
    Transform2 inv = T.inverse();
    Transform2 prod = T * inv;
    CHECK(prod.a == Rat(1));
    CHECK(prod.b == Rat(0));
    CHECK(prod.c == Rat(0));
    CHECK(prod.d == Rat(1));
    CHECK_THROWS_AS((Transform2{1, 2, 2, 4}.inverse()), SingularTransform);

    SECTION("applying a transform keeps line count and multiplicities") {
        Multiarrangement A = b2(2, 2, 1, 3);
        Multiarrangement B = apply_transform(A, T);
        CHECK(B.n_lines() == 4);
        CHECK(B.mults == A.mults);
        // y is fixed by this shear; x maps elsewhere
        CHECK(B.lines[1] == LineForm{0, 1});
    }

    SECTION("fractional transforms clear to integer forms") {
        Multiarrangement A = b2(1, 1, 1, 1);
        Multiarrangement B = apply_transform(A, Transform2{Rat(1, 2), 0, 0, 1});
        for (const LineForm& f : B.lines) {
            CHECK(gcd(abs(f.a), abs(f.b)) <= 1);
        }
    }
}

TEST_CASE("x/y normalization moves the first two lines onto the axes",
          "[core_model]") {
    Multiarrangement A =
        normalize_arrangement({{1, -1}, {1, 1}, {1, 0}, {0, 1}}, {3, 3, 1, 1});
    auto [B, T] = normalize_to_xy(A);
    CHECK(B.is_xy_normalized());
    CHECK(B.mults == A.mults);

    SECTION("already normalized input returns the identity") {
        Multiarrangement C = b2(2, 2, 1, 3);
        auto [D, U] = normalize_to_xy(C);
        CHECK(D.lines == C.lines);
        CHECK(U.a == Rat(1));
        CHECK(U.b == Rat(0));
        CHECK(U.c == Rat(0));
        CHECK(U.d == Rat(1));
    }

    CHECK_THROWS_AS(normalize_to_xy(normalize_arrangement({{1, 0}}, {2})),
                    TooFewLines);
}

TEST_CASE("exponent pairs sort and validate", "[core_model]") {
    ExponentPair p(5, 3);
    CHECK(p.d1 == 3);
    CHECK(p.d2 == 5);
    CHECK(p.delta() == 2);
    CHECK(p.sum() == 8);
    CHECK_THROWS_AS(ExponentPair(-1, 2), BadRange);
}
