#include "arrexp/symbolic.hpp"
#include "arrexp/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace arrexp;
using testutil::b2;
using testutil::with_slopes;

TEST_CASE("determinant polynomial of x^2 y^2 (x-y)(x-zy)^3", "[symbolic]") {
    IntPolynomial p = det_wy_polynomial(b2(2, 2, 1, 3), 3);
    CHECK(p == IntPolynomial{{Int(0), Int(0), Int(-2), Int(0), Int(2)}});
    CHECK(p.str("z") == "2*z^4 - 2*z^2");
}

TEST_CASE("simple four-line template is identically zero", "[symbolic]") {
    // exponents of the simple arrangement are (1, 3) whatever the slopes, so
    // the square matrix at e = 1 is singular for every value of z
    IntPolynomial p = det_wy_polynomial(b2(1, 1, 1, 1), 3);
    CHECK(p.is_zero());
}

TEST_CASE("symbolic determinant matches pointwise evaluation", "[symbolic]") {
    SECTION("x^3 y^3 (x-y)^2 (x-zy)^4 at z = 2") {
        IntPolynomial p = det_wy_polynomial(b2(3, 3, 2, 4), 3);
        Multiarrangement at2 = with_slopes({1, 2}, {3, 3, 2, 4});
        Rat direct = determinant(build_square_wy(at2).matrix);
        CHECK(p.eval(Rat(2)) == direct);
    }

    SECTION("several templates at several integer points") {
        const std::vector<Multiarrangement> templates = {
            b2(2, 2, 1, 3),
            b2(3, 3, 2, 2),
            with_slopes({2, 7}, {2, 4, 3, 3}),
            with_slopes({3, 5, 7}, {2, 2, 1, 1, 2}),
        };
        for (const Multiarrangement& T : templates) {
            std::size_t sym = T.n_lines() - 1;
            IntPolynomial p = det_wy_polynomial(T, sym);
            for (long long z = -6; z <= 6; ++z) {
                // skip values colliding with an existing slope or axis
                bool taken = z == 0;
                for (std::size_t i = 2; i + 1 < T.n_lines(); ++i)
                    if (T.lines[i].slope() == Rat(z)) taken = true;
                if (taken) continue;
                std::vector<std::pair<Int, Int>> lines;
                std::vector<long long> mults = T.mults;
                for (std::size_t i = 0; i + 1 < T.n_lines(); ++i)
                    lines.push_back({T.lines[i].a, T.lines[i].b});
                lines.push_back({1, -z});
                Multiarrangement A = normalize_arrangement(lines, mults);
                CHECK(p.eval(Rat(z)) == determinant(build_square_wy(A).matrix));
            }
        }
    }
}

TEST_CASE("rational fixed slopes clear to integer coefficients", "[symbolic]") {
    // third line x - (1/2) y has a rational slope; the result is still an
    // integer polynomial after denominator clearing
    Multiarrangement T =
        normalize_arrangement({{1, 0}, {0, 1}, {2, -1}, {1, 1}}, {2, 2, 1, 3});
    IntPolynomial p = det_wy_polynomial(T, 3);
    CHECK_FALSE(p.is_zero());
    // pointwise agreement up to the cleared scale: compare root structure
    Multiarrangement at3 =
        normalize_arrangement({{1, 0}, {0, 1}, {2, -1}, {1, -3}}, {2, 2, 1, 3});
    Rat direct = determinant(build_square_wy(at3).matrix);
    CHECK((p.eval(Rat(3)) == 0) == (direct == 0));
}

TEST_CASE("template validation", "[symbolic]") {
    CHECK_THROWS_AS(det_wy_polynomial(b2(2, 2, 1, 3), 1), DegenerateTemplate);
    CHECK_THROWS_AS(det_wy_polynomial(b2(2, 2, 1, 3), 9), IndexOutOfRange);
    CHECK_THROWS_AS(det_wy_polynomial(b2(2, 2, 1, 2), 3), OddSize);
    CHECK_THROWS_AS(det_wy_polynomial(b2(1, 1, 1, 5), 3), Unbalanced);
}
