#include "lagrange3/cuts.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lagrange3 {

namespace {

const Quad kThree(3L);

CutClass decide(const Interval& enc)
{
    if (compare(enc.lo, kThree) > 0) {
        return CutClass::Bad;
    }
    if (compare(enc.hi, kThree) <= 0) {
        return CutClass::Good;
    }
    return CutClass::Undecided;
}

// Snapshot of a word plus per-cut incremental state.
struct Context {
    std::vector<Quotient> letters;
    Interval base;
    const LazyWord* word = nullptr;
};

struct CutState {
    Rational eta;
    Mobius m;
    CutReport report;
};

Context make_context(const LazyWord& w, std::size_t needed)
{
    Context ctx;
    ctx.word = &w;
    ctx.letters = w.available(needed);
    ctx.base = tail_enclosure({}, w.continuation_bound());
    return ctx;
}

// Extends the right tail to `target` letters and recomputes the enclosure.
void refine(CutState& st, const Context& ctx, std::size_t target)
{
    std::size_t left = st.report.pos.left_len;
    std::size_t have = st.report.depth;
    std::size_t end = std::min(left + target, ctx.letters.size());
    for (std::size_t k = left + have; k < end; ++k) {
        st.m.push(ctx.letters[k]);
    }
    st.report.depth = end > left ? end - left : 0;
    st.report.enclosure = st.m.apply(ctx.base) + st.eta;
    st.report.cls = decide(st.report.enclosure);
}

CutState start_cut(const Context& ctx, std::size_t left_len, Rational eta)
{
    CutState st;
    st.eta = std::move(eta);
    st.report.pos.left_len = left_len;
    if (auto tail = ctx.word->periodic_tail(left_len)) {
        Quad gamma = periodic_value(tail->first, tail->second);
        Quad value = gamma + Quad(st.eta);
        st.report.exact = value;
        st.report.enclosure = Interval::point(value);
        st.report.cls = compare(value, kThree) > 0 ? CutClass::Bad : CutClass::Good;
    }
    return st;
}

bool can_refine(const CutState& st, const Context& ctx, std::size_t max_depth)
{
    std::size_t left = st.report.pos.left_len;
    return st.report.depth < max_depth && left + st.report.depth < ctx.letters.size();
}

void run_schedule(CutState& st, const Context& ctx, std::size_t max_depth)
{
    if (st.report.exact) {
        return;
    }
    for (std::size_t d : depth_schedule(max_depth)) {
        if (st.report.depth >= d) {
            continue;
        }
        refine(st, ctx, d);
        if (st.report.cls != CutClass::Undecided || !can_refine(st, ctx, max_depth)) {
            return;
        }
    }
}

// eta for every left_len in [0, horizon]: q_{i-1} / q_i.
std::vector<Rational> etas(const std::vector<Quotient>& letters, std::size_t horizon)
{
    std::vector<Rational> out;
    out.reserve(horizon + 1);
    Integer q_prev = 0;
    Integer q = 1;
    out.emplace_back(0);
    for (std::size_t i = 0; i < horizon; ++i) {
        Integer q_next = q * letters[i] + q_prev;
        q_prev = std::move(q);
        q = std::move(q_next);
        Rational r(q_prev, q);
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CutState> classify_states(const LazyWord& w, const Context& ctx, std::size_t first, std::size_t horizon,
                                      std::size_t max_depth)
{
    if (ctx.letters.size() < horizon) {
        throw Error(ErrorKind::Undecidable, "only " + std::to_string(ctx.letters.size()) +
                                                " letters are known; horizon is " + std::to_string(horizon));
    }
    (void)w;
    std::vector<Rational> eta = etas(ctx.letters, horizon);
    std::size_t n = horizon >= first ? horizon - first + 1 : 0;
    std::vector<CutState> states(n);
    parallel_for(n, [&](std::size_t k) {
        std::size_t i = first + k;
        states[k] = start_cut(ctx, i, eta[i]);
        run_schedule(states[k], ctx, max_depth);
    });
    return states;
}

}  // namespace

const char* to_string(CutClass cls)
{
    switch (cls) {
    case CutClass::Good:
        return "Good";
    case CutClass::Bad:
        return "Bad";
    case CutClass::Indeterminate:
        return "Indeterminate";
    case CutClass::Undecided:
        return "Undecided";
    }
    return "?";
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn)
{
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    std::size_t workers = std::min<std::size_t>(hw, n / 16 + 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) {
                    return;
                }
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = n;
                    return;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::vector<std::size_t> depth_schedule(std::size_t max_depth)
{
    std::vector<std::size_t> out;
    for (std::size_t d = 16; d < max_depth; d *= 2) {
        out.push_back(d);
    }
    out.push_back(max_depth);
    return out;
}

Rational reversed_value(const std::vector<Quotient>& left)
{
    Integer q_prev = 0;
    Integer q = 1;
    for (Quotient x : left) {
        Integer q_next = q * x + q_prev;
        q_prev = std::move(q);
        q = std::move(q_next);
    }
    Rational r(q_prev, q);
    r.canonicalize();
    return r;
}

CutValue cut_value(const std::vector<Quotient>& left, const LazyWord& right, std::size_t depth)
{
    Rational eta = reversed_value(left);
    CutValue out;
    if (auto tail = right.periodic_tail(0)) {
        Quad v = periodic_value(tail->first, tail->second) + Quad(eta);
        out.exact = v;
        out.enclosure = Interval::point(v);
        return out;
    }
    std::vector<Quotient> letters = right.available(depth);
    out.enclosure = mobius_apply(letters, tail_enclosure({}, right.continuation_bound())) + eta;
    return out;
}

bool transpose_value_check(const std::vector<Quotient>& e, Quotient x, const std::vector<Quotient>& f,
                           const std::vector<Quotient>& closure)
{
    auto side = [&](const std::vector<Quotient>& left, const std::vector<Quotient>& right) {
        std::vector<Quotient> lhead{0};
        lhead.insert(lhead.end(), left.begin(), left.end());
        std::vector<Quotient> rhead{x};
        rhead.insert(rhead.end(), right.begin(), right.end());
        return periodic_value(lhead, closure) + periodic_value(rhead, closure);
    };
    // lambda(E^T | xF): reading leftwards from the cut gives E.
    return compare(side(e, f), side(f, e)) == 0;
}

FiniteCutReport classify_finite_cut(const std::vector<Quotient>& word, CutPos pos)
{
    std::size_t i = pos.left_len;
    if (i > word.size()) {
        throw Error(ErrorKind::BadArgument, "cut position " + std::to_string(i) + " beyond word of length " +
                                                std::to_string(word.size()));
    }
    const Quad b_tail = periodic_value({}, {1});  // b^inf
    const Quad a_tail = periodic_value({}, {2});  // a^inf

    std::vector<Quotient> left{0};
    for (std::size_t k = i; k-- > 0;) {
        left.push_back(word[k]);
    }
    std::vector<Quotient> right(word.begin() + static_cast<std::ptrdiff_t>(i), word.end());
    if (right.empty()) {
        throw Error(ErrorKind::BadArgument, "cut at the end of the word");
    }
    Interval ext{b_tail, a_tail};
    Interval eta = mobius_apply(left, ext);
    Interval gamma = mobius_apply(right, ext);

    FiniteCutReport rep;
    rep.pos = pos;
    rep.min = QuadSum{eta.lo, gamma.lo};
    rep.max = QuadSum{eta.hi, gamma.hi};
    if (compare(rep.min, Rational(3)) > 0) {
        rep.cls = CutClass::Bad;
    } else if (compare(rep.max, Rational(3)) <= 0) {
        rep.cls = CutClass::Good;
    } else {
        rep.cls = CutClass::Indeterminate;
    }
    return rep;
}

std::size_t apply_cut_sugar(const Word& literal, std::size_t left_len)
{
    if (literal.alphabet != Alphabet::AB || left_len % 2 != 0) {
        return left_len;
    }
    std::size_t k = left_len / 2;
    if (k >= 1 && k < literal.letters.size() && literal.letters[k - 1] == 'a' && literal.letters[k] == 'b') {
        return left_len - 1;
    }
    return left_len;
}

CutLiteral parse_cut_literal(std::string_view text)
{
    std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw ParseError(text.size(), "cut literal needs a '|'");
    }
    if (text.find('|', bar + 1) != std::string_view::npos) {
        throw ParseError(text.find('|', bar + 1), "more than one '|'");
    }
    std::string joined = std::string(text.substr(0, bar)) + std::string(text.substr(bar + 1));
    Word w;
    try {
        w = parse_word(joined);
    } catch (const ParseError& e) {
        std::size_t off = e.offset() >= bar ? e.offset() + 1 : e.offset();
        throw ParseError(off, "bad cut literal");
    }
    std::size_t left = w.alphabet == Alphabet::AB ? 2 * bar : bar;
    CutLiteral out;
    out.pos.left_len = apply_cut_sugar(w, left);
    out.word = chi_expand(w);
    return out;
}

CutReport classify_infinite_cut(const LazyWord& w, CutPos pos, const std::vector<Quotient>& left_context,
                                std::size_t max_depth)
{
    std::size_t i = pos.left_len;
    Context ctx = make_context(w, i + max_depth);
    if (ctx.letters.size() < i) {
        throw Error(ErrorKind::Undecidable, "left side of the cut is not known");
    }
    std::vector<Quotient> left = left_context;
    left.insert(left.end(), ctx.letters.begin(), ctx.letters.begin() + static_cast<std::ptrdiff_t>(i));
    CutState st = start_cut(ctx, i, reversed_value(left));
    run_schedule(st, ctx, max_depth);
    return st.report;
}

std::vector<CutReport> classify_range(const LazyWord& w, std::size_t first, std::size_t horizon,
                                      std::size_t max_depth)
{
    Context ctx = make_context(w, horizon + max_depth);
    std::vector<CutState> states = classify_states(w, ctx, first, horizon, max_depth);
    std::vector<CutReport> out;
    out.reserve(states.size());
    for (auto& st : states) {
        out.push_back(std::move(st.report));
    }
    return out;
}

CountResult count_bad_cuts(const LazyWord& w, std::size_t horizon, std::size_t max_depth, std::size_t first)
{
    CountResult res;
    res.first = first;
    res.horizon = horizon;
    for (const CutReport& r : classify_range(w, first, horizon, max_depth)) {
        res.deepest = std::max(res.deepest, r.depth);
        if (r.cls == CutClass::Bad) {
            res.bad.push_back(r.pos.left_len);
        } else if (r.cls == CutClass::Undecided) {
            res.undecided.push_back(r.pos.left_len);
        }
    }
    return res;
}

Evidence lagrange_evidence(const LazyWord& w, std::size_t horizon, std::size_t max_depth)
{
    Context ctx = make_context(w, horizon + max_depth);
    std::vector<CutState> states = classify_states(w, ctx, 0, horizon, max_depth);
    Evidence ev;
    std::vector<std::size_t> good;
    for (std::size_t k = 0; k < states.size(); ++k) {
        switch (states[k].report.cls) {
        case CutClass::Good:
            good.push_back(k);
            break;
        case CutClass::Bad:
            ++ev.bad;
            break;
        default:
            ++ev.undecided;
            break;
        }
    }
    ev.good = good.size();
    if (good.empty()) {
        throw Error(ErrorKind::NotFound, "no Good cut within the horizon");
    }
    auto lo_of = [&](std::size_t k) -> const Quad& { return states[k].report.enclosure.lo; };
    auto hi_of = [&](std::size_t k) -> const Quad& { return states[k].report.enclosure.hi; };
    std::size_t best = good.front();
    for (std::size_t k : good) {
        if (compare(lo_of(k), lo_of(best)) > 0) {
            best = k;
        }
    }
    // Refine every rival that still overlaps the leader, then the leader.
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::size_t> rivals;
        for (std::size_t k : good) {
            if (k != best && compare(hi_of(k), lo_of(best)) > 0 && can_refine(states[k], ctx, max_depth) &&
                !states[k].report.exact) {
                rivals.push_back(k);
            }
        }
        if (rivals.empty()) {
            break;
        }
        parallel_for(rivals.size(), [&](std::size_t j) {
            CutState& st = states[rivals[j]];
            refine(st, ctx, std::min(max_depth, st.report.depth * 2));
        });
        for (std::size_t k : rivals) {
            if (compare(lo_of(k), lo_of(best)) > 0) {
                best = k;
            }
        }
        if (!states[best].report.exact && can_refine(states[best], ctx, max_depth)) {
            refine(states[best], ctx, std::min(max_depth, states[best].report.depth * 2));
        }
        changed = true;
    }
    ev.pos = states[best].report.pos;
    ev.max = {lo_of(best), hi_of(best)};
    for (std::size_t k : good) {
        if (compare(hi_of(k), ev.max.hi) > 0) {
            ev.max.hi = hi_of(k);
        }
    }
    return ev;
}

}  // namespace lagrange3
