#include "gen.hpp"

#include "lagrange3/lazy_word.hpp"

#include <doctest.h>

#include <thread>

using namespace lagrange3;

TEST_CASE("eventually periodic words")
{
    auto w = LazyWord::eventually_periodic({1}, {2, 1});
    CHECK(w.prefix(6) == std::vector<Quotient>{1, 2, 1, 2, 1, 2});
    CHECK_FALSE(w.known_limit());
    auto tail = w.periodic_tail(3);
    REQUIRE(tail);
    CHECK(tail->first.empty());
    CHECK(tail->second.size() == 2);
}

TEST_CASE("open prefixes stop at the known part")
{
    auto w = LazyWord::open_prefix({1, 2, 2});
    CHECK(w.known_limit() == 3u);
    CHECK(w.available(10).size() == 3);
    CHECK(w.continuation_bound() == 2);
    CHECK_THROWS_AS(w.prefix(4), Error);
    CHECK_FALSE(w.periodic_tail(0));
}

TEST_CASE("glue and projection")
{
    auto tail = LazyWord::eventually_periodic({}, {2});
    auto g = LazyWord::glue({1, 1}, tail);
    CHECK(g.prefix(4) == std::vector<Quotient>{1, 1, 2, 2});
    auto p = LazyWord::projection(BiInfiniteDesc::periodic("ab"));
    CHECK(p.prefix(8) == std::vector<Quotient>{2, 2, 1, 1, 2, 2, 1, 1});
    CHECK(quotients_of(parse_word("ab")) == std::vector<Quotient>{2, 2, 1, 1});
}

TEST_CASE("generated words are consistent under concurrent access")
{
    auto w = LazyWord::generated(
        [](std::size_t n) {
            std::vector<Quotient> out(n + 7);
            for (std::size_t i = 0; i < out.size(); ++i) {
                out[i] = static_cast<Quotient>(1 + (i * i) % 2);
            }
            return out;
        },
        "squares mod 2");
    std::vector<std::thread> pool;
    std::vector<std::vector<Quotient>> got(4);
    for (std::size_t t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] { got[t] = w.prefix(100 * (t + 1)); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (std::size_t t = 1; t < 4; ++t) {
        CHECK(std::equal(got[0].begin(), got[0].end(), got[t].begin()));
    }
    CHECK(w.description() == "squares mod 2");
}
