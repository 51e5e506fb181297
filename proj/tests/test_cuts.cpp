#include "gen.hpp"

#include "lagrange3/constructions.hpp"
#include "lagrange3/verify.hpp"

#include <doctest.h>

using namespace lagrange3;

namespace {

CutClass finite(const char* literal, std::size_t pos)
{
    Word w = parse_word(literal);
    return classify_finite_cut(quotients_of(w), {apply_cut_sugar(w, pos)}).cls;
}

}  // namespace

TEST_CASE("reversed values and schedules")
{
    CHECK(reversed_value({1, 2}) == Rational(1, 3));
    CHECK(reversed_value({2}) == Rational(1, 2));
    CHECK(depth_schedule(100) == std::vector<std::size_t>{16, 32, 64, 100});
    CHECK(depth_schedule(64) == std::vector<std::size_t>{16, 32, 64});
}

TEST_CASE("finite cut examples")
{
    CHECK(finite("bbaab", 4) == CutClass::Bad);
    CHECK(finite("aabaab", 6) == CutClass::Good);
    CHECK(finite("abaab", 2) == CutClass::Indeterminate);
    CHECK(apply_cut_sugar(parse_word("abaab"), 2) == 1);
    CHECK(apply_cut_sugar(parse_word("bbaab"), 4) == 4);

    CutLiteral c = parse_cut_literal("bb|aab");
    CHECK(c.pos.left_len == 4);
    CHECK(c.word.letters == "1111222211");
    CHECK(parse_cut_literal("1111|222211").pos.left_len == 4);
    CHECK_THROWS_AS(parse_cut_literal("ab"), ParseError);
    CHECK_THROWS_AS(parse_cut_literal("a|b|a"), ParseError);
}

TEST_CASE("finite extremes bracket every periodic closure")
{
    gen::Rng rng;
    for (int i = 0; i < 40; ++i) {
        std::string s = rng.ab(rng.range(3, 8));
        Word w{Alphabet::AB, s};
        auto q = quotients_of(w);
        std::size_t pos = rng.range(1, q.size() - 1);
        FiniteCutReport r = classify_finite_cut(q, {pos});
        CHECK(compare(r.min, r.max) <= 0);
        // right closure (ab)^inf, left closure cut off at the word start
        std::vector<Quotient> left(q.begin(), q.begin() + static_cast<long>(pos));
        std::vector<Quotient> right(q.begin() + static_cast<long>(pos), q.end());
        for (std::size_t extra = 0; extra < 3; ++extra) {
            std::vector<Quotient> l2 = left;
            l2.insert(l2.begin(), {1, 1, 2, 2});
            CutValue v = cut_value(l2, LazyWord::eventually_periodic(right, {2, 2, 1, 1}), 64);
            REQUIRE(v.exact);
            CHECK(compare(QuadSum{*v.exact, Quad(0L)}, r.max) <= 0);
            CHECK(compare(QuadSum{*v.exact, Quad(0L)}, r.min) >= 0);
        }
    }
}

TEST_CASE("exact cut values on periodic tails")
{
    std::vector<Quotient> left(20, 1);
    CutValue v = cut_value(left, LazyWord::eventually_periodic({}, {1}), 32);
    REQUIRE(v.exact);
    Quad phi = periodic_value({}, {1});
    CHECK(*v.exact == Quad(reversed_value(left)) + phi);
    CHECK(v.enclosure.contains(*v.exact));
}

TEST_CASE("transposition symmetry")
{
    gen::Rng rng;
    for (int i = 0; i < 60; ++i) {
        auto e = rng.quotients(rng.range(1, 8));
        auto f = rng.quotients(rng.range(1, 8));
        CHECK(transpose_value_check(e, static_cast<Quotient>(rng.range(1, 2)), f));
    }
}

TEST_CASE("infinite cuts")
{
    // first a of (abb)^inf
    auto w = LazyWord::eventually_periodic({}, quotients_of(parse_word("abb")));
    CHECK(classify_infinite_cut(w, {1}).cls == CutClass::Bad);
    // a|baab... with an open continuation
    auto open = make_lazy_word(parse_word_spec("open:abaab"));
    CHECK(classify_infinite_cut(open, {1}).cls == CutClass::Bad);
    // 1^inf: every cut is sqrt5-ish, Good
    auto ones = LazyWord::eventually_periodic({}, {1});
    CountResult c = count_bad_cuts(ones, 50);
    CHECK(c.count() == 0u);
    // open prefix too short to decide
    auto tiny = LazyWord::open_prefix({2, 2});
    CHECK(classify_infinite_cut(tiny, {1}).cls == CutClass::Undecided);
}

TEST_CASE("bad cuts match close convergents")
{
    gen::Rng rng;
    for (int i = 0; i < 8; ++i) {
        auto head = rng.quotients(rng.range(0, 3), 3);
        auto period = rng.quotients(rng.range(1, 3), 3);
        CountResult c = count_bad_cuts(LazyWord::eventually_periodic(head, period), 30);
        REQUIRE(c.count());
        CHECK(*c.count() == count_close_convergents(head, period, 30));
    }
}

TEST_CASE("evidence on the golden ratio word")
{
    auto ones = LazyWord::eventually_periodic({}, {1});
    Evidence e = lagrange_evidence(ones, 40);
    CHECK(e.bad == 0);
    CHECK(e.undecided == 0);
    CHECK(compare(e.max.hi, Quad(3L)) < 0);
    CHECK(e.max.contains(e.max.lo));
}
