#include "gen.hpp"

#include "lagrange3/numeric.hpp"

#include <doctest.h>

#include <cmath>

using namespace lagrange3;

TEST_CASE("quad normal form")
{
    Quad x(Integer(2), Integer(4), Integer(6), Integer(8));  // (2 + 4 sqrt 8) / 6 = (1 + 4 sqrt 2) / 3
    CHECK(x.p() == 1);
    CHECK(x.q() == 4);
    CHECK(x.r() == 3);
    CHECK(x.d() == 2);

    Quad rat(Integer(3), Integer(2), Integer(1), Integer(9));  // 3 + 2*3
    CHECK(rat.is_rational());
    CHECK(rat == Quad(9L));

    Quad neg(Integer(1), Integer(1), Integer(-2), Integer(5));
    CHECK(neg.r() > 0);
}

TEST_CASE("sqrt and arithmetic are exact")
{
    Quad s5 = Quad::sqrt(Rational(5));
    CHECK(s5 * s5 == Quad(5L));
    Quad phi = (Quad(1L) + s5) / Quad(2L);
    CHECK(phi * phi == phi + Quad(1L));
    CHECK(phi.reciprocal() == phi - Quad(1L));
    CHECK(Quad::sqrt(Rational(8)) == Quad(2L) * Quad::sqrt(Rational(2)));
    CHECK(Quad::sqrt(Rational(9, 4)) == Quad(Rational(3, 2)));
}

TEST_CASE("comparison across radicands")
{
    CHECK(Quad::sqrt(Rational(2)) < Quad::sqrt(Rational(3)));
    CHECK(Quad::sqrt(Rational(8)) > Quad(Rational(14, 5)));
    CHECK(Quad::sqrt(Rational(8)) < Quad(Rational(283, 100)));
    // 3 vs sqrt(9) written differently
    CHECK(compare(Quad(3L), Quad::sqrt(Rational(9))) == 0);

    gen::Rng rng;
    for (int i = 0; i < 300; ++i) {
        long a = static_cast<long>(rng.range(1, 500));
        long b = static_cast<long>(rng.range(1, 500));
        Quad x = Quad::sqrt(Rational(a));
        Quad y = Quad::sqrt(Rational(b));
        CHECK(compare(x, y) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("decimal rendering, 30 digits half-even")
{
    CHECK(to_decimal(Quad::sqrt(Rational(2))) == "1.41421356237309504880168872421");
    CHECK(to_decimal(Quad::sqrt(Rational(5))) == "2.23606797749978969640917366873");
    CHECK(to_decimal(Rational(1, 3)) == "0.333333333333333333333333333333");
    CHECK(to_decimal(Rational(3)) == "3");
    // tie: 0.5 at one digit rounds to even
    CHECK(to_decimal(Rational(25, 10), 1) == "2");
    CHECK(to_decimal(Rational(35, 10), 1) == "4");
}

TEST_CASE("isqrt and perfect squares")
{
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        Integer n(static_cast<unsigned long>(rng.range(0, 1u << 30)));
        Integer s = isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
        CHECK(is_perfect_square(s * s));
    }
    CHECK_FALSE(is_perfect_square(Integer(2)));
}

TEST_CASE("quad sums")
{
    QuadSum s{Quad::sqrt(Rational(2)), Quad::sqrt(Rational(3))};
    CHECK_FALSE(s.single_field());
    CHECK(compare(s, Rational(314, 100)) > 0);
    CHECK(compare(s, Rational(315, 100)) < 0);
    QuadSum t{Quad::sqrt(Rational(2)), Quad(1L)};
    CHECK(t.single_field());
    CHECK(t.collapse() == Quad(1L) + Quad::sqrt(Rational(2)));
}

TEST_CASE("sums compared across four fields")
{
    auto r = [](long n) { return Quad::sqrt(Rational(n)); };
    // sqrt2 + sqrt3 vs sqrt5 + sqrt(0.01): 3.146 vs 2.336
    CHECK(compare(QuadSum{r(2), r(3)}, QuadSum{r(5), Quad(Rational(1, 10))}) > 0);
    CHECK(compare(QuadSum{r(2), r(3)}, QuadSum{r(3), r(2)}) == 0);
    CHECK(compare(QuadSum{r(2), r(8)}, QuadSum{r(18), Quad(0L)}) == 0);
    // sqrt6 + sqrt7 = 5.0952, sqrt5 + sqrt8 = 5.0645
    CHECK(compare(QuadSum{r(6), r(7)}, QuadSum{r(5), r(8)}) > 0);
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        long a = static_cast<long>(rng.range(1, 60));
        long b = static_cast<long>(rng.range(1, 60));
        long c = static_cast<long>(rng.range(1, 60));
        long d = static_cast<long>(rng.range(1, 60));
        double diff = std::sqrt(a) + std::sqrt(b) - std::sqrt(c) - std::sqrt(d);
        if (std::abs(diff) > 1e-9) {
            CHECK(compare(QuadSum{r(a), r(b)}, QuadSum{r(c), r(d)}) == (diff > 0 ? 1 : -1));
        }
    }
}
