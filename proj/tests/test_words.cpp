#include "gen.hpp"

#include "lagrange3/verify.hpp"
#include "lagrange3/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

using namespace lagrange3;

TEST_CASE("word literals")
{
    Word w = parse_word("abba");
    CHECK(w.alphabet == Alphabet::AB);
    CHECK(w.length() == 8);
    CHECK(parse_word("2211").alphabet == Alphabet::OneTwo);
    try {
        parse_word("ab12");
        FAIL("mixed literal accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_word("abc"), ParseError);
}

TEST_CASE("chi round trip")
{
    CHECK(chi("ab") == "2211");
    CHECK(chi_factor(parse_word("112222")).letters == "baa");
    try {
        chi_factor(parse_word("22211"));
        FAIL("odd run accepted");
    } catch (const OddRun& e) {
        CHECK(e.position() == 0);
        CHECK(e.length() == 3);
    }
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        std::string s = rng.ab(rng.range(0, 30));
        Word w{Alphabet::AB, s};
        CHECK(chi_factor(chi_expand(w)) == w);
    }
}

TEST_CASE("substitutions")
{
    CHECK(apply_subst(Subst::U, "ab") == "abb");
    CHECK(apply_subst(Subst::V, "ab") == "aab");
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        std::string s = rng.ab(rng.range(0, 25));
        CHECK(apply_subst(Subst::u, apply_subst(Subst::U, s)) == s);
        CHECK(apply_subst(Subst::v, apply_subst(Subst::V, s)) == s);
    }
    CHECK_THROWS_AS(apply_subst(Subst::u, "a"), Error);
}

TEST_CASE("operator words")
{
    CHECK(render_ops(parse_ops("UVVU")) == "UVVU");
    try {
        parse_ops("UXV");
        FAIL("bad op accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("bar pairs concatenate to Cohn words")
{
    auto tree = cohn_tree(7);
    CHECK(tree.size() == 255);
    CHECK(tree[1].word == "abb");
    CHECK(tree[2].word == "aab");
    for (const auto& v : tree) {
        auto rev = v.path;
        std::reverse(rev.begin(), rev.end());
        WordPair p = bar_pair(rev);
        CHECK(p.alpha + p.beta == v.word);
    }
}

TEST_CASE("tilde pairs")
{
    WordPair r = tilde_root();
    CHECK(r.alpha == "a");
    CHECK(r.beta == "ab");
    WordPair u = tilde_pair(parse_ops("U"));
    CHECK(u.alpha == "aabab");
    CHECK(u.beta == "aababab");
    WordPair v = tilde_pair(parse_ops("V"));
    CHECK(v.alpha == "aababab");
    CHECK(v.beta == "aabababab");
    CHECK(expand_tilde_ops(parse_ops("UV")).ops == parse_ops("UUVUUUV"));
    for (const auto& ops : all_op_words(4)) {
        CHECK_NOTHROW(interior_of_exterior(ops));
    }
}

TEST_CASE("word modifications")
{
    CHECK(word_mod("abb", WordMod::Plus) == "bb");
    CHECK(word_mod("abb", WordMod::Minus) == "ab");
    CHECK(word_mod("abb", WordMod::SupB) == "bbb");
    CHECK(word_mod("abb", WordMod::SubA) == "aba");
    CHECK(word_mod("abb", WordMod::Transpose) == "bba");
    CHECK_THROWS_AS(word_mod("bab", WordMod::SupB), Error);
    CHECK_THROWS_AS(word_mod("aba", WordMod::SubA), Error);
    CHECK(parse_word_mod("sup_b") == WordMod::SupB);
    CHECK(is_palindrome("abba"));
    CHECK_FALSE(is_palindrome("ab"));
    gen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        std::string s = rng.ab(rng.range(0, 20));
        CHECK(transpose(transpose(s)) == s);
        CHECK(is_palindrome(s + transpose(s)));
    }
}

TEST_CASE("decoding over a pair")
{
    WordPair p = tilde_pair(parse_ops("UV"));
    auto d = decode(p.alpha + p.beta + p.beta + p.alpha, p);
    CHECK(d == std::vector<Letter>{Letter::Alpha, Letter::Beta, Letter::Beta, Letter::Alpha});
    CHECK_THROWS_AS(decode("bbbb", p), NotDecodable);
}

TEST_CASE("operator streams")
{
    OperatorStream alt(parse_ops("U"), Continuation::Alternate);
    CHECK(render_ops(alt.prefix(6)) == "UUVUVU");
    CHECK_FALSE(alt.eventually_constant());
    OperatorStream cu(parse_ops("V"), Continuation::ConstU);
    CHECK(cu.eventually_constant());
    CHECK(render_ops(cu.prefix(4)) == "VUUU");
    CHECK(alt.pair(2) == tilde_pair(alt.prefix(2)));
    CHECK(parse_continuation("alt") == Continuation::Alternate);
}

TEST_CASE("pair cache persists and validates")
{
    std::string path = "test_words_cache.tsv";
    {
        PairCache c;
        for (const auto& ops : all_op_words(3)) {
            c.put(render_ops(ops), tilde_pair(ops));
        }
        c.save(path);
    }
    PairCache loaded;
    CHECK(loaded.load(path) == 0);
    WordPair got;
    REQUIRE(loaded.find("UVU", got));
    CHECK(got == tilde_pair(parse_ops("UVU")));

    {
        std::ofstream out(path, std::ios::app);
        out << "VV\tab\tba\n";
    }
    PairCache bad;
    CHECK(bad.load(path) >= 1);
    // the later, inconsistent line wins and is then dropped
    CHECK_FALSE(bad.find("VV", got));
    CHECK(bad.find("UV", got));
    std::remove(path.c_str());
}
