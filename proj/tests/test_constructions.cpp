#include "gen.hpp"

#include "lagrange3/constructions.hpp"

#include <doctest.h>

using namespace lagrange3;

namespace {

CountResult count_spec(const std::string& text)
{
    WitnessSpec spec = parse_witness_spec(text);
    auto stream = make_stream(spec);
    return count_bad_cuts(witness(spec, stream), default_horizon(spec, *stream));
}

}  // namespace

TEST_CASE("witness spec text form")
{
    WitnessSpec s = parse_witness_spec("n=2;ops=UV;cont=alt;variant=projection");
    CHECK(s.n == 2u);
    CHECK(s.ops == parse_ops("UV"));
    CHECK(s.cont == Continuation::Alternate);
    CHECK(s.variant == Variant::Projection);
    CHECK(parse_witness_spec("variant=threes;ops=U;n=3") == parse_witness_spec("n=3;ops=U;variant=threes"));
    CHECK_FALSE(parse_witness_spec("n=inf").n.has_value());
    CHECK_THROWS_AS(parse_witness_spec("n=2;ops=UX"), Error);
    CHECK_THROWS_AS(parse_witness_spec("n=2;colour=red"), Error);
    // syntax errors carry an offset; well-formed but meaningless specs are BadSpec
    try {
        parse_witness_spec("n=two");
        FAIL("bad n accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        auto s2 = parse_witness_spec("n=inf;variant=threes");
        make_stream(s2);
        witness(s2, make_stream(s2));
        FAIL("threes with n=inf accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadSpec);
    }
}

TEST_CASE("small witness counts")
{
    CountResult c0 = count_spec("n=0;ops=UV;cont=alt");
    CHECK(c0.count() == 0u);
    CountResult c1 = count_spec("n=1;ops=UV;cont=alt;variant=projection");
    CHECK(c1.count() == 1u);
    CHECK(c1.bad == std::vector<std::size_t>{1});
    CountResult c2 = count_spec("n=2;ops=UV;cont=alt;variant=projection");
    CHECK(c2.bad == std::vector<std::size_t>{1, 7});
    CountResult t3 = count_spec("n=3;variant=threes;ops=U;cont=alt");
    CHECK(t3.bad == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("stage words grow and nest")
{
    auto stream = std::make_shared<OperatorStream>(parse_ops("UV"));
    std::size_t prev = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t h = stage_horizon(*stream, k);
        CHECK(h > prev);
        prev = h;
    }
    auto p30 = omega_x30(*stream, 200);
    auto pinf = omega_x3inf(*stream, 200);
    CHECK(p30.size() == 200);
    CHECK(omega_x30_word(stream).prefix(200) == p30);
    CHECK(omega_x3inf_word(stream).prefix(200) == pinf);
    std::string a = limit_prefix(*stream, LimitWord::Alpha, 50);
    std::string deep = stage_word(*stream, LimitWord::Alpha, limit_stage(*stream, LimitWord::Alpha, 50) + 1);
    CHECK(deep.compare(0, 50, a) == 0);
}

TEST_CASE("degenerate examples")
{
    auto w = degenerate_example({1, 2, 3}, 12);
    CHECK(w == std::vector<Quotient>{1, 2, 2, 1, 1, 2, 2, 1, 1, 1, 2, 2});
    CHECK_THROWS_AS(degenerate_example({2, 2}, 10), Error);
}

TEST_CASE("distinct seeds give distinct limits")
{
    Divergence d = injectivity_check(parse_ops("U"), parse_ops("V"), Center::X30);
    CHECK(d.position() == 13);
    gen::Rng rng;
    for (int i = 0; i < 10; ++i) {
        auto x = rng.ops(rng.range(1, 3));
        auto y = rng.ops(rng.range(1, 3));
        if (x == y) {
            continue;
        }
        for (Center side : {Center::X30, Center::X3Inf}) {
            Divergence dv = injectivity_check(x, y, side);
            CHECK(dv.index < dv.horizon);
        }
    }
}

TEST_CASE("bad cut inside the first beta")
{
    auto stream = std::make_shared<OperatorStream>(parse_ops("UV"));
    CHECK(stage_bad_cut_locator(stream, 1).left_len == 13);
    CHECK(stage_bad_cut_locator(stream, 2).left_len == 65);
}

TEST_CASE("word spec literals and sugar")
{
    auto spec = parse_word_spec("periodic:b/abb");
    auto lit = literal_of(spec, 5);
    REQUIRE(lit);
    CHECK(lit->letters.substr(0, 4) == "babb");
    CHECK_FALSE(literal_of(parse_word_spec("n=1;ops=U"), 4));
    CHECK(make_lazy_word(spec).prefix(6) == std::vector<Quotient>{1, 1, 2, 2, 1, 1});
}
