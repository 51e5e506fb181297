#include "gen.hpp"
#include "report.hpp"

#include <doctest.h>

using namespace lagrange3;
using namespace lagrange3::report;

TEST_CASE("exact fields round trip")
{
    gen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        long p = static_cast<long>(rng.range(0, 2000)) - 1000;
        long q = static_cast<long>(rng.range(0, 20)) - 10;
        long r = static_cast<long>(rng.range(1, 99));
        long d = static_cast<long>(rng.range(0, 300));
        Quad x{Integer(p), Integer(q), Integer(r), Integer(d)};
        Json j = exact_json(x);
        CHECK(quad_from_json(Json::parse(j.dump())) == x);
    }
    QuadSum mixed{Quad::sqrt(Rational(2)), Quad::sqrt(Rational(3))};
    CHECK(exact_json(mixed).contains("terms"));
    QuadSum same{Quad::sqrt(Rational(2)), Quad(1L)};
    CHECK(quad_from_json(exact_json(same)) == same.collapse());
}

TEST_CASE("decimal fields are the 30 digit rendering")
{
    Json rec;
    put_value(rec, "value", Quad::sqrt(Rational(221)) / Quad(5L));
    CHECK(rec["value"] == "2.97321374946370110452240164279");
    CHECK(quad_from_json(rec["value_exact"]) == Quad::sqrt(Rational(221)) / Quad(5L));
    Json iv;
    put_interval(iv, {Quad(Rational(1, 3)), Quad(1L)});
    CHECK(iv["value_lo"] == "0.333333333333333333333333333333");
    CHECK(iv["value_hi"] == "1");
}

TEST_CASE("status and exit codes")
{
    CHECK(exit_code(Status::Ok) == 0);
    CHECK(exit_code(Status::Undecided) == 2);
    CHECK(exit_code(Status::Failed) == 1);
    CHECK(combine(Status::Ok, Status::Undecided) == Status::Undecided);
    CHECK(combine(Status::Failed, Status::Undecided) == Status::Failed);
    CHECK(std::string(to_string(Status::Undecided)) == "undecided");
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("json layout")
{
    Report r;
    r.command = "classify";
    r.input = {{"word", "bb|aab"}};
    r.results.push_back({{"position", 4}, {"class", "Bad"}});
    Json j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"command", "input", "results", "status", "timing_ms"});
    r.error = {{"kind", "ParseError"}, {"message", "x"}, {"offset", 3}};
    r.status = Status::Failed;
    Json e = to_json(r);
    CHECK(e["status"] == "failed");
    CHECK(e["error"]["offset"] == 3);
    CHECK(Json::parse(render(r, Format::Json)) == e);
}

TEST_CASE("csv flattening")
{
    Json a{{"position", 1}, {"exact", {{"p", "1"}, {"q", "0"}}}, {"note", "x,y"}};
    Json b{{"position", 2}, {"bad", Json::array({3, 5})}};
    CHECK(flatten(a).contains("exact.p"));
    CHECK(flatten(b)["bad.1"] == 5);
    std::string csv = to_csv({a, b});
    CHECK(csv == "position,exact.p,exact.q,note,bad.0,bad.1\n"
                 "1,1,0,\"x,y\",,\n"
                 "2,,,,3,5\n");
    Json quote{{"s", "say \"hi\""}};
    CHECK(to_csv({quote}) == "s\n\"say \"\"hi\"\"\"\n");
}

TEST_CASE("text view drops exact forms")
{
    Report r;
    r.command = "markov";
    Json rec;
    put_value(rec, "value", Quad::sqrt(Rational(5)));
    r.results.push_back(rec);
    std::string t = to_text(r);
    CHECK(t.find("value=2.236") != std::string::npos);
    CHECK(t.find("exact") == std::string::npos);
}
