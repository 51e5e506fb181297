#include "lagrange3/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

namespace lagrange3 {

const char* to_string(Outcome outcome)
{
    switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Undecided: return "undecided";
    }
    return "?";
}

namespace {

// Collects one case per property; the first failing input is kept as detail.
class Tally {
public:
    Tally(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++checked_;
        if (!ok && failed_++ == 0) {
            first_ = what();
        }
    }
    void undecided(const std::string& what)
    {
        if (undecided_++ == 0 && first_.empty()) {
            first_ = what;
        }
    }
    CaseResult result() const
    {
        CaseResult r{suite_, name_, Outcome::Pass, ""};
        std::ostringstream os;
        os << checked_ << " checked";
        if (failed_ > 0) {
            r.outcome = Outcome::Fail;
            os << ", " << failed_ << " failed, first: " << first_;
        } else if (undecided_ > 0) {
            r.outcome = Outcome::Undecided;
            os << ", " << undecided_ << " undecided, first: " << first_;
        }
        r.detail = os.str();
        return r;
    }

private:
    std::string suite_;
    std::string name_;
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::size_t undecided_ = 0;
    std::string first_;
};

CaseResult single(const std::string& suite, const std::string& name, bool ok, std::string detail)
{
    return {suite, name, ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

// Runs a case body, turning library errors into a failed case.
CaseResult guarded(const std::string& suite, const std::string& name, const std::function<CaseResult()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {suite, name, Outcome::Fail, std::string(to_string(e.kind())) + ": " + e.what()};
    }
}

std::vector<std::vector<Op>> words_up_to(std::size_t max_len, bool include_empty)
{
    std::vector<std::vector<Op>> out;
    if (include_empty) {
        out.emplace_back();
    }
    std::vector<std::vector<Op>> level{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Op>> next;
        for (const auto& w : level) {
            for (Op op : {Op::U, Op::V}) {
                auto x = w;
                x.push_back(op);
                next.push_back(x);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::string ab_palindrome(std::mt19937_64& rng, std::size_t len)
{
    std::string half;
    for (std::size_t i = 0; i < (len + 1) / 2; ++i) {
        half.push_back(rng() % 2 == 0 ? 'a' : 'b');
    }
    std::string out = half;
    std::string back = half.substr(0, len / 2);
    std::reverse(back.begin(), back.end());
    return out + back;
}

std::vector<Quotient> random_quotients(std::mt19937_64& rng, std::size_t len, Quotient max_q)
{
    std::vector<Quotient> out(len);
    for (Quotient& q : out) {
        q = static_cast<Quotient>(1 + rng() % max_q);
    }
    return out;
}

std::string show(const std::vector<Quotient>& q)
{
    std::string s;
    for (Quotient x : q) {
        s += std::to_string(x);
    }
    return s;
}

std::string repeat(const std::string& w, std::size_t n)
{
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        out += w;
    }
    return out;
}

bool starts_with(const std::string& w, const std::string& prefix)
{
    return w.size() >= prefix.size() && w.compare(0, prefix.size(), prefix) == 0;
}

bool ends_with(const std::string& w, const std::string& suffix)
{
    return w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// w = a theta b with theta a palindrome; returns theta.
std::optional<std::string> palindromic_core(const std::string& w)
{
    if (w.size() < 2 || w.front() != 'a' || w.back() != 'b') {
        return std::nullopt;
    }
    std::string theta = w.substr(1, w.size() - 2);
    if (!is_palindrome(theta)) {
        return std::nullopt;
    }
    return theta;
}

std::size_t bar_depth(const VerifyOptions& opts)
{
    return opts.depth == 0 ? 10 : opts.depth;
}

std::size_t cohn_depth(const VerifyOptions& opts)
{
    return opts.depth == 0 ? 6 : opts.depth;
}

}  // namespace

std::vector<std::vector<Op>> all_op_words(std::size_t max_len, bool include_empty)
{
    return words_up_to(max_len, include_empty);
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"identities", "cuts", "markov", "counts", "injectivity"};
    return names;
}

std::vector<CaseResult> run_suite(std::string_view suite, const VerifyOptions& opts)
{
    if (suite == "identities") {
        return verify_identities(opts);
    }
    if (suite == "cuts") {
        return verify_cuts(opts);
    }
    if (suite == "markov") {
        return verify_markov(opts);
    }
    if (suite == "counts") {
        return verify_counts(opts);
    }
    if (suite == "injectivity") {
        return verify_injectivity(opts);
    }
    if (suite == "all") {
        std::vector<CaseResult> out;
        for (const std::string& name : suite_names()) {
            auto part = run_suite(name, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw Error(ErrorKind::BadArgument, "unknown suite " + std::string(suite));
}

std::vector<CaseResult> verify_identities(const VerifyOptions& opts)
{
    const std::string suite = "identities";
    std::vector<CaseResult> out;
    std::size_t depth = bar_depth(opts);
    auto bar_words = words_up_to(depth, true);
    std::vector<WordPair> pairs;
    pairs.reserve(bar_words.size());
    for (const auto& ops : bar_words) {
        pairs.push_back(bar_pair(ops));
    }
    auto path_of = [](const WordPair& p) { return "[" + render_ops(p.path.ops) + "]"; };

    Tally har1(suite, "pair: alpha beta = beta_a alpha^b");
    Tally har2(suite, "pair: alpha^b beta = beta^T alpha^b");
    Tally har3(suite, "pair: alpha beta_a = beta_a alpha^T");
    Tally core1(suite, "pair: alpha beta = a theta b, theta palindrome");
    Tally core4(suite, "pair: alpha alpha beta beta = a t a b t b, t palindrome");
    for (const WordPair& p : pairs) {
        const std::string& a = p.alpha;
        const std::string& b = p.beta;
        std::string a_sup = word_mod(a, WordMod::SupB);
        std::string b_sub = word_mod(b, WordMod::SubA);
        har1.check(a + b == b_sub + a_sup, [&] { return path_of(p); });
        har2.check(a_sup + b == transpose(b) + a_sup, [&] { return path_of(p); });
        har3.check(a + b_sub == b_sub + transpose(a), [&] { return path_of(p); });
        core1.check(palindromic_core(a + b).has_value(), [&] { return path_of(p); });

        std::string w = a + a + b + b;
        bool ok = false;
        if (w.size() >= 4 && w.front() == 'a' && w.back() == 'b') {
            std::string mid = w.substr(1, w.size() - 2);
            std::size_t t = (mid.size() - 2) / 2;
            std::string theta = mid.substr(0, t);
            ok = mid.size() % 2 == 0 && mid.substr(t, 2) == "ab" && mid.substr(t + 2) == theta && is_palindrome(theta);
        }
        core4.check(ok, [&] { return path_of(p); });
    }
    out.push_back(har1.result());
    out.push_back(har2.result());
    out.push_back(har3.result());
    out.push_back(core1.result());
    out.push_back(core4.result());

    Tally pal(suite, "palindrome w: bU(w) and V(w)a are palindromes");
    std::vector<std::string> level{""};
    for (std::size_t len = 0; len <= 12; ++len) {
        if (len > 0) {
            std::vector<std::string> next;
            for (const std::string& w : level) {
                next.push_back(w + "a");
                next.push_back(w + "b");
            }
            level = std::move(next);
        }
        for (const std::string& w : level) {
            if (!is_palindrome(w)) {
                continue;
            }
            pal.check(is_palindrome("b" + apply_subst(Subst::U, w)) && is_palindrome(apply_subst(Subst::V, w) + "a"),
                      [&] { return w.empty() ? std::string("(empty)") : w; });
        }
    }
    out.push_back(pal.result());

    out.push_back(guarded(suite, "interior substitution agrees with exterior fold", [&] {
        Tally t(suite, "interior substitution agrees with exterior fold");
        for (std::size_t i = 0; i < bar_words.size(); ++i) {
            WordPair both = interior_of_exterior(bar_words[i]);
            t.check(both == pairs[i], [&] { return path_of(pairs[i]); });
        }
        return t.result();
    }));

    std::mt19937_64 rng(opts.seed);
    out.push_back(guarded(suite, "decode inverts concatenation", [&] {
        Tally t(suite, "decode inverts concatenation");
        for (const auto& ops : words_up_to(std::min<std::size_t>(6, depth), true)) {
            WordPair p = bar_pair(ops);
            for (int rep = 0; rep < 4; ++rep) {
                std::size_t len = 1 + rng() % 50;
                std::vector<Letter> seq(len);
                std::string w;
                for (Letter& l : seq) {
                    l = rng() % 2 == 0 ? Letter::Alpha : Letter::Beta;
                    w += l == Letter::Alpha ? p.alpha : p.beta;
                }
                t.check(decode(w, p) == seq, [&] { return path_of(p) + " on " + w.substr(0, 40); });
            }
        }
        return t.result();
    }));

    auto tilde_words = words_up_to(opts.tilde_length, true);
    Tally expand(suite, "tilde pair equals fold of its expansion");
    for (const auto& ops : tilde_words) {
        WordPair folded = tilde_root();
        folded.path = {Family::Bar, {}};
        for (Op op : expand_tilde_ops(ops).ops) {
            folded = pair_step(folded, op);
        }
        expand.check(folded == tilde_pair(ops), [&] { return "[" + render_ops(ops) + "]"; });
    }
    out.push_back(expand.result());

    Tally nest(suite, "tilde stage words extend the previous stage");
    Tally not_prefix(suite, "tilde stage words are not prefixes of their siblings");
    Tally psfix(suite, "tilde pair cores are nested palindromes");
    for (const auto& ops : tilde_words) {
        WordPair p = tilde_pair(ops);
        std::string name = "[" + render_ops(ops) + "]";
        const std::string& a = p.alpha;
        const std::string& b = p.beta;
        if (ops.size() < opts.tilde_length) {
            for (Op op : {Op::U, Op::V}) {
                auto longer = ops;
                longer.push_back(op);
                WordPair q = tilde_pair(longer);
                std::string qbt = transpose(q.beta);
                nest.check(starts_with(qbt, transpose(b)) && ends_with(qbt, transpose(a)) &&
                               starts_with(q.alpha + q.beta + q.beta, a + b + b),
                           [&] { return "[" + render_ops(longer) + "]"; });
            }
        }
        std::string bt = transpose(b);
        std::string at = transpose(a);
        not_prefix.check(!starts_with(repeat(bt, 4) + at, repeat(bt, 3) + at), [&] { return name + " x30"; });
        std::string u = a + b + b;
        std::string v = a + b + b + b;
        std::string vv = a + b + b + b + b;
        not_prefix.check(!starts_with(v + vv + vv, u + v + v), [&] { return name + " x3inf"; });
        if (!ops.empty()) {
            auto ta = palindromic_core(a);
            auto tb = palindromic_core(b);
            psfix.check(ta && tb && starts_with(*tb, *ta) && ends_with(*tb, *ta), [&] { return name; });
        }
    }
    out.push_back(nest.result());
    out.push_back(not_prefix.result());
    out.push_back(psfix.result());
    return out;
}

std::size_t evidence_depth(std::size_t horizon, std::size_t max_depth)
{
    return std::max(max_depth, std::bit_ceil(2 * horizon));
}

std::size_t count_close_convergents(const std::vector<Quotient>& head, const std::vector<Quotient>& period,
                                    std::size_t horizon)
{
    std::vector<Quotient> full{0};
    full.insert(full.end(), head.begin(), head.end());
    Quad x = periodic_value(full, period);
    CFWord prefix{0, {}};
    std::size_t i = 0;
    while (prefix.quotients.size() < horizon) {
        prefix.quotients.push_back(i < head.size() ? head[i] : period[(i - head.size()) % period.size()]);
        ++i;
    }
    std::vector<Convergent> conv = convergents(prefix);
    std::size_t count = 0;
    for (std::size_t n = 0; n <= horizon && n < conv.size(); ++n) {
        Rational approx(conv[n].p, conv[n].q);
        approx.canonicalize();
        Quad diff = x - Quad(approx);
        if (diff.sign() < 0) {
            diff = -diff;
        }
        Rational bound(Integer(1), Integer(3 * conv[n].q * conv[n].q));
        bound.canonicalize();
        if (compare(diff, Quad(bound)) < 0) {
            ++count;
        }
    }
    return count;
}

std::vector<CaseResult> verify_cuts(const VerifyOptions& opts)
{
    const std::string suite = "cuts";
    std::vector<CaseResult> out;

    struct Literal {
        const char* text;
        CutClass expected;
    };
    for (Literal lit : {Literal{"bb|aab", CutClass::Bad}, Literal{"aab|aab", CutClass::Good},
                        Literal{"a|baab", CutClass::Indeterminate}}) {
        out.push_back(guarded(suite, std::string("finite ") + lit.text, [&] {
            CutLiteral c = parse_cut_literal(lit.text);
            FiniteCutReport r = classify_finite_cut(quotients_of(c.word), c.pos);
            return single(suite, std::string("finite ") + lit.text, r.cls == lit.expected,
                          std::string(to_string(r.cls)) + " in [" + to_decimal(r.min) + ", " + to_decimal(r.max) + "]");
        }));
    }
    out.push_back(guarded(suite, "(abb)^inf projection, cut inside the first a", [&] {
        LazyWord w = LazyWord::eventually_periodic({}, {2, 2, 1, 1, 1, 1});
        CutReport r = classify_infinite_cut(w, {1}, {}, opts.max_depth);
        return single(suite, "(abb)^inf projection, cut inside the first a", r.cls == CutClass::Bad,
                      to_string(r.cls));
    }));
    out.push_back(guarded(suite, "a|baab... with unknown continuation", [&] {
        LazyWord w = LazyWord::open_prefix({2, 2, 1, 1, 2, 2, 2, 2, 1, 1});
        CutReport r = classify_infinite_cut(w, {1}, {}, opts.max_depth);
        return single(suite, "a|baab... with unknown continuation", r.cls == CutClass::Bad, to_string(r.cls));
    }));
    out.push_back(guarded(suite, "[2;2,w] + [0;1,1,w] = 3 for w = (2211)^inf", [&] {
        Quad lhs = periodic_value({2, 2}, {2, 2, 1, 1}) + periodic_value({0, 1, 1}, {2, 2, 1, 1});
        return single(suite, "[2;2,w] + [0;1,1,w] = 3 for w = (2211)^inf", lhs == Quad(3L), lhs.to_string());
    }));

    std::mt19937_64 rng(opts.seed);
    Tally transposed(suite, "transposed cuts have equal values");
    for (int i = 0; i < 200; ++i) {
        auto e = random_quotients(rng, 1 + rng() % 6, 2);
        auto f = random_quotients(rng, 1 + rng() % 6, 2);
        Quotient x = static_cast<Quotient>(1 + rng() % 2);
        transposed.check(transpose_value_check(e, x, f), [&] { return show(e) + "|" + std::to_string(x) + show(f); });
    }
    out.push_back(transposed.result());

    Tally family(suite, "palindromic core cut families");
    for (std::size_t i = 0; i < opts.samples; ++i) {
        std::string core = ab_palindrome(rng, rng() % 9);
        std::string rev = transpose(core);
        struct Shape {
            std::string text;
            CutClass expected;
        };
        for (const Shape& s : {Shape{"a" + rev + "b|a" + core + "b", CutClass::Good},
                               Shape{"b" + rev + "a|b" + core + "a", CutClass::Good},
                               Shape{"b" + rev + "b|a" + core + "a", CutClass::Bad},
                               Shape{"a" + rev + "a|b" + core + "b", CutClass::Bad}}) {
            CutLiteral c = parse_cut_literal(s.text);
            FiniteCutReport r = classify_finite_cut(quotients_of(c.word), c.pos);
            family.check(r.cls == s.expected, [&] { return s.text + " gave " + to_string(r.cls); });
        }
    }
    out.push_back(family.result());

    out.push_back(guarded(suite, "even cuts of projection witnesses are Good", [&] {
        Tally t(suite, "even cuts of projection witnesses are Good");
        const std::size_t horizon = 2000;
        std::vector<WitnessSpec> specs;
        for (std::size_t i = 0; i < 10; ++i) {
            WitnessSpec spec;
            spec.n = rng() % (opts.max_n + 1);
            std::size_t len = 1 + rng() % 3;
            for (std::size_t k = 0; k < len; ++k) {
                spec.ops.push_back(rng() % 2 == 0 ? Op::U : Op::V);
            }
            specs.push_back(spec);
        }
        std::vector<std::vector<CutReport>> reports(specs.size());
        for (std::size_t i = 0; i < specs.size(); ++i) {
            auto stream = make_stream(specs[i]);
            reports[i] = classify_range(witness(specs[i], stream), 0, horizon, opts.max_depth);
        }
        for (std::size_t i = 0; i < specs.size(); ++i) {
            for (const CutReport& r : reports[i]) {
                if (r.pos.left_len % 2 != 0) {
                    continue;
                }
                if (r.cls == CutClass::Undecided) {
                    t.undecided(render(specs[i]) + " at " + std::to_string(r.pos.left_len));
                    continue;
                }
                t.check(r.cls == CutClass::Good,
                        [&] { return render(specs[i]) + " at " + std::to_string(r.pos.left_len); });
            }
        }
        return t.result();
    }));

    out.push_back(guarded(suite, "bad cuts count close convergents", [&] {
        Tally t(suite, "bad cuts count close convergents");
        const std::size_t horizon = 40;
        for (std::size_t i = 0; i < opts.samples; ++i) {
            auto head = random_quotients(rng, rng() % 4, 3);
            auto period = random_quotients(rng, 1 + rng() % 3, 3);
            CountResult c = count_bad_cuts(LazyWord::eventually_periodic(head, period), horizon, opts.max_depth);
            std::size_t brute = count_close_convergents(head, period, horizon);
            std::string name = show(head) + "(" + show(period) + ")";
            if (!c.count()) {
                t.undecided(name);
                continue;
            }
            t.check(*c.count() == brute, [&] {
                return name + ": " + std::to_string(*c.count()) + " vs " + std::to_string(brute);
            });
        }
        return t.result();
    }));
    for (Center side : {Center::X30, Center::X3Inf}) {
        std::string name = std::string("bi-infinite witness ") + to_string(side) + " stays at most 3";
        out.push_back(guarded(suite, name, [&] {
            auto stream = std::make_shared<OperatorStream>(std::vector<Op>{Op::U, Op::V});
            WindowEvidence ev = markov_window_evidence(biinfinite_witness(stream, side), -1000, 1000,
                                                       evidence_depth(1000, opts.max_depth));
            CaseResult r{suite, name, Outcome::Pass,
                         std::to_string(ev.checked) + " cuts, max in [" + to_decimal(ev.max.lo) + ", " +
                             to_decimal(ev.max.hi) + "]"};
            if (ev.above > 0) {
                r.outcome = Outcome::Fail;
            } else if (ev.undecided > 0) {
                r.outcome = Outcome::Undecided;
                r.detail += ", still containing 3 at";
                for (long long pos : ev.straddling) {
                    r.detail += " " + std::to_string(pos);
                }
            }
            return r;
        }));
    }
    return out;
}

std::vector<CaseResult> verify_markov(const VerifyOptions& opts)
{
    const std::string suite = "markov";
    std::vector<CaseResult> out;

    out.push_back(guarded(suite, "triples solve the Markov equation", [&] {
        Tally t(suite, "triples solve the Markov equation");
        for (const MarkovTriple& m : markov_tree(100000)) {
            t.check(satisfies_markov_equation(m), [&] {
                return m.z1.get_str() + "," + m.z2.get_str() + "," + m.z3.get_str();
            });
        }
        return t.result();
    }));
    out.push_back(guarded(suite, "spectrum values increase below 3", [&] {
        Tally t(suite, "spectrum values increase below 3");
        std::optional<Quad> prev;
        Integer last = 0;
        for (const Integer& z : markov_numbers(100000)) {
            Quad v = spectrum_value(z).value;
            t.check(compare(v, Quad(3L)) < 0 && (!prev || compare(*prev, v) < 0),
                    [&] { return "z=" + z.get_str(); });
            prev = v;
            last = z;
        }
        Quad gap = Quad(3L) - *prev;
        t.check(last >= 10000 && compare(gap, Quad(Rational(1, 1000))) < 0,
                [&] { return "3 - value = " + to_decimal(gap) + " at z=" + last.get_str(); });
        return t.result();
    }));
    for (const char* period : {"b", "a", "ab"}) {
        out.push_back(guarded(suite, std::string("periodic value of ") + period, [&] {
            Quad v = periodic_markov_value(period);
            long z = std::string(period) == "b" ? 1 : std::string(period) == "a" ? 2 : 5;
            return single(suite, std::string("periodic value of ") + period, v == spectrum_value(z).value,
                          v.to_string());
        }));
    }
    out.push_back(guarded(suite, "Cohn vertices map to Markov numbers", [&] {
        Tally t(suite, "Cohn vertices map to Markov numbers");
        auto tree = cohn_tree(cohn_depth(opts));
        std::vector<std::string> bad(tree.size());
        parallel_for(tree.size(), [&](std::size_t i) {
            try {
                Integer z = cohn_to_markov(tree[i].word);
                if (!(periodic_markov_value(tree[i].word) == spectrum_value(z).value)) {
                    bad[i] = "value mismatch";
                }
            } catch (const Error& e) {
                bad[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < tree.size(); ++i) {
            t.check(bad[i].empty(), [&] { return tree[i].word + ": " + bad[i]; });
        }
        return t.result();
    }));

    out.push_back(guarded(suite, "m_tilde of [1;1,1,...]", [&] {
        MTilde m = m_tilde(parse_cf("1;(1)"));
        Quad expected = (Quad(3L) + Quad::sqrt(5)) / Quad(2L);
        return single(suite, "m_tilde of [1;1,1,...]", m.value == expected,
                      m.value.to_string() + (m.attained ? " attained" : " not attained"));
    }));
    out.push_back(guarded(suite, "m_tilde of [2;2,2,...]", [&] {
        MTilde m = m_tilde(parse_cf("2;(2)"));
        Quad expected = (Quad(3L) + Quad::sqrt(8)) / Quad(2L);
        return single(suite, "m_tilde of [2;2,2,...]", m.value == expected,
                      m.value.to_string() + (m.attained ? " attained" : " not attained"));
    }));

    std::mt19937_64 rng(opts.seed);
    out.push_back(guarded(suite, "m_tilde dominates the Lagrange value", [&] {
        Tally t(suite, "m_tilde dominates the Lagrange value");
        for (std::size_t i = 0; i < opts.samples; ++i) {
            CFSpec x;
            x.head.push_back(static_cast<Quotient>(rng() % 3));
            auto head = random_quotients(rng, rng() % 4, 3);
            x.head.insert(x.head.end(), head.begin(), head.end());
            x.period = random_quotients(rng, 1 + rng() % 3, 3);
            t.check(compare(m_tilde(x).value, lagrange_value(x)) >= 0, [&] { return render_cf(x); });
        }
        return t.result();
    }));
    out.push_back(guarded(suite, "smallest m_tilde over short expansions", [&] {
        std::optional<Quad> best;
        std::string arg;
        for (std::size_t hl = 0; hl <= 2; ++hl) {
            for (std::size_t pl = 1; pl <= 2; ++pl) {
                for (std::size_t mask = 0; mask < (1u << (hl + pl)); ++mask) {
                    CFSpec x;
                    x.head.push_back(0);
                    for (std::size_t k = 0; k < hl + pl; ++k) {
                        Quotient q = (mask >> k) & 1u ? 2 : 1;
                        (k < hl ? x.head : x.period).push_back(q);
                    }
                    Quad v = m_tilde(x).value;
                    if (!best || compare(v, *best) < 0) {
                        best = v;
                        arg = render_cf(x);
                    }
                }
            }
        }
        Quad expected = (Quad(3L) + Quad::sqrt(5)) / Quad(2L);
        return single(suite, "smallest m_tilde over short expansions", *best == expected,
                      best->to_string() + " at " + arg);
    }));

    out.push_back(guarded(suite, "m_tilde evidence on witnesses 0 and 1", [&] {
        WitnessSpec s0 = parse_witness_spec("n=0;ops=UV");
        WitnessSpec s1 = parse_witness_spec("n=1;ops=UV");
        auto stream = make_stream(s0);
        std::size_t horizon = stage_horizon(*stream, 3);
        Interval e0 = m_tilde_evidence(witness(s0, stream), horizon, opts.max_depth);
        Interval e1 = m_tilde_evidence(witness(s1, stream), horizon, opts.max_depth);
        bool ok = compare(e0.hi, Quad(3L)) <= 0 && compare(e1.lo, Quad(3L)) > 0;
        return single(suite, "m_tilde evidence on witnesses 0 and 1", ok,
                      "n=0 hi " + to_decimal(e0.hi) + ", n=1 lo " + to_decimal(e1.lo));
    }));

    return out;
}

std::vector<CaseResult> verify_counts(const VerifyOptions& opts)
{
    const std::string suite = "counts";
    auto seeds = words_up_to(3, true);

    struct Job {
        std::string name;
        std::function<CaseResult()> run;
    };
    std::vector<Job> jobs;
    for (const auto& seed : seeds) {
        std::string ops = render_ops(seed);
        std::string tag = "ops=" + (ops.empty() ? std::string("-") : ops);
        auto count_job = [&, seed](WitnessSpec spec, std::vector<std::size_t> expected_at) {
            spec.ops = seed;
            std::string name = render(spec);
            jobs.push_back({name, [=, &opts] {
                                return guarded(suite, name, [&] {
                                    auto stream = make_stream(spec);
                                    CountResult c = count_bad_cuts(witness(spec, stream),
                                                                   default_horizon(spec, *stream), opts.max_depth);
                                    std::ostringstream os;
                                    os << "bad at";
                                    for (std::size_t b : c.bad) {
                                        os << ' ' << b;
                                    }
                                    if (!c.undecided.empty()) {
                                        os << ", " << c.undecided.size() << " undecided";
                                        return CaseResult{suite, name, Outcome::Undecided, os.str()};
                                    }
                                    bool ok = c.bad.size() == *spec.n &&
                                              (expected_at.empty() || c.bad == expected_at);
                                    return single(suite, name, ok, os.str());
                                });
                            }});
        };
        for (std::size_t n = 0; n <= opts.max_n; ++n) {
            WitnessSpec spec;
            spec.n = n;
            count_job(spec, {});
        }
        for (std::size_t n = 1; n <= 5; ++n) {
            WitnessSpec spec;
            spec.n = n;
            spec.variant = Variant::Threes;
            std::vector<std::size_t> leading(n);
            for (std::size_t k = 0; k < n; ++k) {
                leading[k] = k;
            }
            count_job(spec, leading);
        }
        std::string name = "stage bad cuts of x3inf, " + tag;
        jobs.push_back({name, [=, &opts] {
                            return guarded(suite, name, [&] {
                                auto stream = std::make_shared<OperatorStream>(seed);
                                std::ostringstream os;
                                os << "positions";
                                std::size_t prev = 0;
                                bool ok = true;
                                for (std::size_t k = 1; k <= 3; ++k) {
                                    std::size_t pos = stage_bad_cut_locator(stream, k, opts.max_depth).left_len;
                                    os << ' ' << pos;
                                    ok = ok && (k == 1 || pos > prev);
                                    prev = pos;
                                }
                                return single(suite, name, ok, os.str());
                            });
                        }});
        std::string name39 = "bad cuts inside (alpha_n^T)+, " + tag;
        jobs.push_back({name39, [=, &opts] {
                            return guarded(suite, name39, [&] {
                                auto stream = std::make_shared<OperatorStream>(seed);
                                std::ostringstream os;
                                bool ok = true;
                                for (std::size_t n = 1; n <= 3; ++n) {
                                    WitnessSpec spec;
                                    spec.n = n + 1;
                                    spec.ops = seed;
                                    std::size_t len = 2 * stream->pair(n).alpha.size() - 2;
                                    CountResult c = count_bad_cuts(witness(spec, stream), len, opts.max_depth);
                                    os << (n > 1 ? ", " : "") << "n=" << n << ": "
                                       << (c.count() ? std::to_string(*c.count()) : std::string("undecided"));
                                    ok = ok && c.count() == n + 1;
                                }
                                return single(suite, name39, ok, os.str());
                            });
                        }});
    }
    jobs.push_back({"Lagrange evidence stages 1-4", [&opts, suite] {
                        const std::string name = "Lagrange evidence stages 1-4";
                        return guarded(suite, name, [&] {
                            WitnessSpec spec;
                            auto stream = make_stream(spec);
                            LazyWord w = witness(spec, stream);
                            std::ostringstream os;
                            bool ok = true;
                            std::optional<Interval> prev;
                            for (std::size_t k = 1; k <= 4; ++k) {
                                std::size_t horizon = stage_horizon(*stream, k + 1);
                                Evidence ev = lagrange_evidence(w, horizon, evidence_depth(horizon, opts.max_depth));
                                os << (k > 1 ? "; " : "") << "stage " << k << " [" << to_decimal(ev.max.lo) << ", "
                                   << to_decimal(ev.max.hi) << "]";
                                ok = ok && ev.undecided == 0 && ev.bad == 0 && compare(ev.max.hi, Quad(3L)) <= 0;
                                ok = ok && (!prev || compare(ev.max.lo, prev->hi) > 0);
                                if (k == 4) {
                                    ok = ok && compare(ev.max.lo, Quad(3L) - Quad(Rational(1, 1000))) > 0;
                                }
                                prev = ev.max;
                            }
                            return single(suite, name, ok, os.str());
                        });
                    }});

    std::vector<CaseResult> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { out[i] = jobs[i].run(); });
    return out;
}

std::vector<CaseResult> verify_injectivity(const VerifyOptions& opts)
{
    const std::string suite = "injectivity";
    auto words = words_up_to(opts.tilde_length, true);
    std::vector<CaseResult> out;
    for (Center side : {Center::X30, Center::X3Inf}) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                pairs.emplace_back(i, j);
            }
        }
        std::vector<std::string> failure(pairs.size());
        std::vector<std::size_t> horizon(pairs.size());
        parallel_for(pairs.size(), [&](std::size_t k) {
            const auto& [i, j] = pairs[k];
            try {
                Divergence d = injectivity_check(words[i], words[j], side);
                horizon[k] = d.horizon;
                if (d.index >= d.horizon) {
                    failure[k] = "index past horizon";
                }
            } catch (const Error& e) {
                failure[k] = e.what();
            }
        });
        std::string name = std::string("distinct words diverge, ") + to_string(side);
        Tally t(suite, name);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            t.check(failure[k].empty(), [&] {
                return "[" + render_ops(words[pairs[k].first]) + "] vs [" + render_ops(words[pairs[k].second]) +
                       "]: " + failure[k];
            });
        }
        CaseResult r = t.result();
        r.detail += ", largest horizon " + std::to_string(*std::max_element(horizon.begin(), horizon.end()));
        out.push_back(r);
    }
    out.push_back(guarded(suite, "[U] vs [V] on x30", [&] {
        Divergence d = injectivity_check({Op::U}, {Op::V}, Center::X30);
        return single(suite, "[U] vs [V] on x30", d.position() == 13,
                      "position " + std::to_string(d.position()) + " within " + std::to_string(d.horizon));
    }));
    return out;
}

}  // namespace lagrange3
