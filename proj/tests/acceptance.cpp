// One PASS/FAIL line per acceptance criterion, with wall time and budget.
#include "lagrange3/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace lagrange3;

namespace {

struct Verdict {
    bool ok = true;
    std::string note;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Verdict()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        v.ok = false;
        v.note += " (over time budget)";
    }
    failures += !v.ok;
    std::printf("%s %2d  %s  [%.2f s / %.0f s]  %s\n", v.ok ? "PASS" : "FAIL", id, title, secs, budget_s,
                v.note.c_str());
    std::fflush(stdout);
}

// All tilde seeds of length <= max_len, the empty one first.
std::vector<std::vector<Op>> seeds(std::size_t max_len) { return all_op_words(max_len, true); }

}  // namespace

int main()
{
    criterion(1, "initial spectrum values", 1, [] {
        bool ok = periodic_markov_value("b") == Quad::sqrt(Rational(5)) &&
                  periodic_markov_value("a") == Quad::sqrt(Rational(8)) &&
                  periodic_markov_value("ab") == Quad::sqrt(Rational(221)) / Quad(5L);
        return Verdict{ok, "b, a, ab -> " + periodic_markov_value("b").to_string() + ", " +
                               periodic_markov_value("a").to_string() + ", " +
                               periodic_markov_value("ab").to_string()};
    });

    criterion(2, "Cohn vertices of depth <= 6 give Markov numbers", 60, [] {
        auto tree = cohn_tree(6);
        std::atomic<int> bad{0};
        parallel_for(tree.size(), [&](std::size_t i) {
            Integer z = cohn_to_markov(tree[i].word);
            if (!markov_numbers(z).count(z) || periodic_markov_value(tree[i].word) != spectrum_value(z).value) {
                ++bad;
            }
        });
        return Verdict{tree.size() == 127 && bad == 0,
                       std::to_string(tree.size()) + " vertices, " + std::to_string(bad.load()) + " mismatches"};
    });

    criterion(3, "word identities (bar depth 10, tilde length 5)", 60, [] {
        VerifyOptions o;
        o.depth = 10;
        o.tilde_length = 5;
        auto cases = verify_identities(o);
        Verdict v{true, std::to_string(cases.size()) + " cases"};
        for (const auto& c : cases) {
            if (c.outcome != Outcome::Pass) {
                v = {false, c.name + ": " + c.detail};
                break;
            }
        }
        return v;
    });

    criterion(4, "cut examples", 1, [] {
        auto fin = [](const char* lit) {
            CutLiteral c = parse_cut_literal(lit);
            return classify_finite_cut(quotients_of(c.word), c.pos).cls;
        };
        CutClass c1 = fin("bb|aab");
        CutClass c2 = fin("aab|aab");
        CutClass c3 = fin("a|baab");
        CutClass c4 = classify_infinite_cut(LazyWord::eventually_periodic({}, quotients_of(parse_word("abb"))), {1}).cls;
        CutClass c5 = classify_infinite_cut(make_lazy_word(parse_word_spec("open:abaab")), {1}).cls;
        bool ok = c1 == CutClass::Bad && c2 == CutClass::Good && c3 == CutClass::Indeterminate &&
                  c4 == CutClass::Bad && c5 == CutClass::Bad;
        std::ostringstream os;
        os << to_string(c1) << ", " << to_string(c2) << ", " << to_string(c3) << ", " << to_string(c4) << ", "
           << to_string(c5);
        return Verdict{ok, os.str()};
    });

    criterion(5, "bad-cut counts, seeds of length <= 3", 600, [] {
        auto all = seeds(3);
        std::vector<std::string> problems(all.size());
        std::vector<std::size_t> undecided(all.size());
        parallel_for(all.size(), [&](std::size_t i) {
            auto stream = std::make_shared<OperatorStream>(all[i], Continuation::Alternate);
            std::size_t horizon = stage_horizon(*stream, 4);
            std::ostringstream err;
            auto run = [&](std::size_t n, Variant variant, std::size_t expected) {
                WitnessSpec spec{n, all[i], Continuation::Alternate, variant};
                CountResult c = count_bad_cuts(witness(spec, stream), horizon, kDefaultMaxDepth);
                undecided[i] += c.undecided.size();
                if (c.count() != expected) {
                    err << render(spec) << " gave " << c.bad.size() << " bad, " << c.undecided.size() << " undecided; ";
                }
            };
            for (std::size_t n = 0; n <= 4; ++n) {
                run(n, Variant::Projection, n);
            }
            for (std::size_t n = 1; n <= 5; ++n) {
                run(n, Variant::Threes, n);
            }
            std::size_t prev = 0;
            for (std::size_t k = 1; k <= 3; ++k) {
                std::size_t pos = stage_bad_cut_locator(stream, k).left_len;
                if (pos <= prev) {
                    err << "locator not increasing at stage " << k << "; ";
                }
                prev = pos;
            }
            problems[i] = err.str();
        });
        std::size_t und = 0;
        for (auto u : undecided) {
            und += u;
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (!problems[i].empty()) {
                return Verdict{false, "[" + render_ops(all[i]) + "] " + problems[i]};
            }
        }
        return Verdict{und == 0, std::to_string(all.size()) + " seeds, " + std::to_string(und) + " undecided"};
    });

    criterion(6, "even cuts of 10 projection witnesses are Good", 300, [] {
        std::mt19937_64 rng(20240917);
        std::size_t checked = 0;
        for (int s = 0; s < 10; ++s) {
            std::vector<Op> ops(rng() % 4);
            for (auto& o : ops) {
                o = rng() % 2 ? Op::V : Op::U;
            }
            WitnessSpec spec{1 + rng() % 4, ops, Continuation::Alternate, Variant::Projection};
            auto stream = make_stream(spec);
            for (const CutReport& r : classify_range(witness(spec, stream), 0, 2000)) {
                if (r.pos.left_len % 2 == 0) {
                    ++checked;
                    if (r.cls != CutClass::Good) {
                        return Verdict{false, render(spec) + " even cut " + std::to_string(r.pos.left_len) + " is " +
                                                  to_string(r.cls)};
                    }
                }
            }
        }
        return Verdict{true, std::to_string(checked) + " even cuts"};
    });

    criterion(7, "bad cuts = close convergents on 20 samples", 30, [] {
        std::mt19937_64 rng(20240917);
        auto draw = [&](std::size_t n) {
            std::vector<Quotient> q(n);
            for (auto& x : q) {
                x = static_cast<Quotient>(1 + rng() % 3);
            }
            return q;
        };
        for (int s = 0; s < 20; ++s) {
            auto head = draw(rng() % 4);
            auto period = draw(1 + rng() % 3);
            CountResult c = count_bad_cuts(LazyWord::eventually_periodic(head, period), 40);
            std::size_t brute = count_close_convergents(head, period, 40);
            if (c.count() != brute) {
                return Verdict{false, "sample " + std::to_string(s) + ": " + std::to_string(c.bad.size()) + " vs " +
                                          std::to_string(brute)};
            }
        }
        return Verdict{true, "20 agree"};
    });

    criterion(8, "m_tilde checks", 60, [] {
        MTilde g = m_tilde(parse_cf("1;(1)"));
        bool value_ok = g.value == (Quad(3L) + Quad::sqrt(Rational(5))) / Quad(2L);
        WitnessSpec s0 = parse_witness_spec("n=0;ops=UV");
        WitnessSpec s1 = parse_witness_spec("n=1;ops=UV");
        auto stream = make_stream(s0);
        std::size_t horizon = stage_horizon(*stream, 3);
        Interval e0 = m_tilde_evidence(witness(s0, stream), horizon);
        Interval e1 = m_tilde_evidence(witness(s1, stream), horizon);
        bool ev_ok = compare(e0.hi, Quad(3L)) <= 0 && compare(e1.lo, Quad(3L)) > 0;
        std::string note = std::string("value ") + (value_ok ? "ok" : "wrong") + ", attained=" +
                           (g.attained ? "true" : "false") + (g.index ? " at " + std::to_string(*g.index) : "") +
                           ", witness(0) hi " + to_decimal(e0.hi, 8) + ", witness(1) lo " + to_decimal(e1.lo, 8);
        return Verdict{value_ok && !g.attained && ev_ok, note};
    });

    criterion(9, "injectivity of tilde words of length <= 5", 60, [] {
        auto words = seeds(5);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                pairs.emplace_back(i, j);
            }
        }
        std::atomic<std::size_t> failed{0};
        std::atomic<std::size_t> widest{0};
        for (Center side : {Center::X30, Center::X3Inf}) {
            parallel_for(pairs.size(), [&](std::size_t k) {
                try {
                    Divergence d = injectivity_check(words[pairs[k].first], words[pairs[k].second], side);
                    if (d.index >= d.horizon) {
                        ++failed;
                    }
                    std::size_t cur = widest.load();
                    while (d.horizon > cur && !widest.compare_exchange_weak(cur, d.horizon)) {
                    }
                } catch (const Error&) {
                    ++failed;
                }
            });
        }
        return Verdict{failed == 0, std::to_string(2 * pairs.size()) + " pairs, " + std::to_string(failed.load()) +
                                        " without divergence, largest horizon " + std::to_string(widest.load())};
    });

    criterion(10, "Lagrange evidence stages 1-4 approach 3 from below", 300, [] {
        WitnessSpec spec;
        auto stream = make_stream(spec);
        LazyWord w = witness(spec, stream);
        std::optional<Interval> prev;
        std::ostringstream os;
        bool ok = true;
        for (std::size_t k = 1; k <= 4; ++k) {
            std::size_t horizon = stage_horizon(*stream, k + 1);
            Evidence ev = lagrange_evidence(w, horizon, evidence_depth(horizon));
            ok = ok && ev.undecided == 0 && compare(ev.max.hi, Quad(3L)) <= 0;
            ok = ok && (!prev || compare(ev.max.lo, prev->hi) > 0);
            if (k == 4) {
                ok = ok && compare(ev.max.lo, Quad(3L) - Quad(Rational(1, 1000))) > 0;
            }
            // the gap underflows double past stage 1
            os << (k > 1 ? ", " : "") << to_decimal(Quad(3L) - ev.max.lo, 3);
            prev = ev.max;
        }
        return Verdict{ok, "gaps 3 - lo: " + os.str()};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
