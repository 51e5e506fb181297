#include "gen.hpp"

#include "lagrange3/cf.hpp"
#include "lagrange3/errors.hpp"

#include <doctest.h>

using namespace lagrange3;

TEST_CASE("finite continued fractions")
{
    CHECK(eval_cf({1, {2, 3}}) == Rational(10, 7));
    auto c = convergents({0, {1, 1, 1, 1}});
    REQUIRE(c.size() == 5);
    CHECK(c.back().p == 3);
    CHECK(c.back().q == 5);
    // p_n q_{n-1} - p_{n-1} q_n = +-1
    gen::Rng rng;
    auto q = rng.quotients(40, 3);
    auto cs = convergents({0, q});
    for (std::size_t i = 1; i < cs.size(); ++i) {
        Integer det = cs[i].p * cs[i - 1].q - cs[i - 1].p * cs[i].q;
        CHECK(abs(det) == 1);
    }
}

TEST_CASE("periodic values")
{
    CHECK(periodic_value({}, {1}) == (Quad(1L) + Quad::sqrt(Rational(5))) / Quad(2L));
    CHECK(periodic_value({}, {2}) == Quad(1L) + Quad::sqrt(Rational(2)));
    CHECK(periodic_value({0}, {2}) == Quad::sqrt(Rational(2)) - Quad(1L));
    // x = [1; (1,2)] satisfies x = 1 + 1/(1 + 1/(2 + (x - 1)))
    Quad x = periodic_value({1}, {1, 2});
    Quad y = x - Quad(1L);
    CHECK(y == Quad(1L) / (Quad(1L) + Quad(1L) / (Quad(2L) + y)));
}

TEST_CASE("mobius maps agree with finite values")
{
    gen::Rng rng;
    for (int i = 0; i < 50; ++i) {
        auto pre = rng.quotients(rng.range(1, 12), 3);
        auto tail = rng.quotients(rng.range(1, 6), 3);
        Mobius m = Mobius::of(pre);
        std::vector<Quotient> all = pre;
        all.insert(all.end(), tail.begin(), tail.end());
        CHECK(m.apply(Quad(finite_value(tail))) == Quad(finite_value(all)));
    }
}

TEST_CASE("tail enclosures contain the periodic values")
{
    gen::Rng rng;
    for (int i = 0; i < 50; ++i) {
        auto pre = rng.quotients(rng.range(1, 10));
        auto per = rng.quotients(rng.range(1, 4));
        std::vector<Quotient> head = pre;
        Interval box = tail_enclosure(pre);
        CHECK(box.contains(periodic_value(head, per)));
    }
}

TEST_CASE("parse and render cf specs")
{
    CFSpec s = parse_cf("1;(1)");
    CHECK(s.head == std::vector<Quotient>{1});
    CHECK(s.period == std::vector<Quotient>{1});
    CHECK(render_cf(parse_cf(render_cf(s))).size() > 0);
    for (const char* text : {"0;1,2,(3,1)", "[2;(2)]", "3;1,4,1,5", "(1,2)", "1;2,2..."}) {
        CFSpec x = parse_cf(text);
        CFSpec y = parse_cf(render_cf(x));
        CHECK(x.head == y.head);
        CHECK(x.period == y.period);
        CHECK(x.open == y.open);
    }
    CHECK_THROWS_AS(parse_cf("1;x"), ParseError);
}

TEST_CASE("alternating comparison")
{
    // [0;1,...] > [0;2,...]
    CHECK(cf_compare(parse_cf("0;1,(1)"), parse_cf("0;2,(1)")).ordering == Ordering::Greater);
    // second quotient flips the order
    CHECK(cf_compare(parse_cf("0;1,1,(1)"), parse_cf("0;1,2,(1)")).ordering == Ordering::Less);
    CHECK(cf_compare(parse_cf("(1)"), parse_cf("1;(1)")).ordering == Ordering::Equal);
    CHECK_THROWS_AS(cf_compare(parse_cf("0;1,1..."), parse_cf("0;1,1...")), Error);

    gen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        CFSpec x{rng.quotients(rng.range(1, 6), 3), rng.quotients(rng.range(1, 3), 3), false};
        CFSpec y{rng.quotients(rng.range(1, 6), 3), rng.quotients(rng.range(1, 3), 3), false};
        int by_value = compare(periodic_value(x), periodic_value(y));
        Ordering o = cf_compare(x, y).ordering;
        CHECK((o == Ordering::Less ? -1 : o == Ordering::Greater ? 1 : 0) == by_value);
    }
}

TEST_CASE("least rotation")
{
    CHECK(least_rotation({2, 1, 1}) == std::vector<Quotient>{1, 1, 2});
    CHECK(least_rotation({1, 2, 1, 2}) == std::vector<Quotient>{1, 2, 1, 2});
}
