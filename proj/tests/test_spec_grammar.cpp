#include "gen.hpp"

#include "lagrange3/constructions.hpp"

#include <doctest.h>

using namespace lagrange3;

TEST_CASE("witness specs round trip")
{
    gen::Rng rng;
    const Continuation conts[] = {Continuation::Alternate, Continuation::Repeat, Continuation::ConstU,
                                  Continuation::ConstV, Continuation::ThueMorse};
    for (int i = 0; i < 300; ++i) {
        WitnessSpec s;
        s.variant = rng.below(2) ? Variant::Threes : Variant::Projection;
        s.n = (s.variant == Variant::Projection && rng.below(5) == 0) ? std::nullopt
                                                                       : std::optional<std::size_t>(rng.range(0, 9));
        s.ops = rng.ops(rng.range(0, 5));
        s.cont = conts[rng.below(5)];
        if (s.cont == Continuation::Repeat && s.ops.empty()) {
            s.ops.push_back(Op::V);
        }
        std::string text = render(s);
        CHECK(parse_witness_spec(text) == s);
        CHECK(render(parse_witness_spec(text)) == text);
        WordSpec w = parse_word_spec(text);
        CHECK(render(w) == text);
    }
}

TEST_CASE("literal specs round trip")
{
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        bool digits = rng.below(2);
        auto lit = [&](std::size_t n) {
            Word w{Alphabet::AB, rng.ab(n)};
            return digits ? chi_expand(w) : w;
        };
        WordSpec p = PeriodicSpec{lit(rng.range(0, 4)), lit(rng.range(1, 4))};
        CHECK(parse_word_spec(render(p)) == p);
        WordSpec o = OpenSpec{lit(rng.range(1, 6))};
        CHECK(parse_word_spec(render(o)) == o);
    }
    CHECK_THROWS_AS(parse_word_spec("periodic:ab"), ParseError);
    CHECK_THROWS_AS(parse_word_spec("periodic:a/"), Error);
    CHECK_THROWS_AS(parse_word_spec("open:a1"), ParseError);
}

TEST_CASE("operator words and expansions round trip")
{
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        auto ops = rng.ops(rng.range(0, 12));
        CHECK(parse_ops(render_ops(ops)) == ops);
        CFSpec x{rng.quotients(rng.range(1, 5), 3), rng.quotients(rng.range(0, 3), 3), false};
        if (x.period.empty() && rng.below(2)) {
            x.open = true;
        }
        CFSpec y = parse_cf(render_cf(x));
        CHECK(y.head == x.head);
        CHECK(y.period == x.period);
        CHECK(y.open == x.open);
    }
}
