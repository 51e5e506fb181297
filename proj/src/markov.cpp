#include "lagrange3/markov.hpp"

#include <algorithm>
#include <deque>

namespace lagrange3 {

namespace {

MarkovTriple sorted(Integer a, Integer b, Integer c)
{
    if (a > b) {
        std::swap(a, b);
    }
    if (b > c) {
        std::swap(b, c);
    }
    if (a > b) {
        std::swap(a, b);
    }
    return {a, b, c};
}

bool triple_less(const MarkovTriple& x, const MarkovTriple& y)
{
    if (x.z3 != y.z3) {
        return x.z3 < y.z3;
    }
    if (x.z2 != y.z2) {
        return x.z2 < y.z2;
    }
    return x.z1 < y.z1;
}

}  // namespace

std::vector<MarkovTriple> markov_tree(const Integer& limit)
{
    if (limit < 1) {
        throw Error(ErrorKind::BadArgument, "limit must be at least 1");
    }
    std::vector<MarkovTriple> out;
    std::deque<MarkovTriple> queue{{1, 1, 1}};
    std::set<MarkovTriple, decltype(&triple_less)> visited(&triple_less);
    visited.insert({1, 1, 1});
    while (!queue.empty()) {
        MarkovTriple t = queue.front();
        queue.pop_front();
        out.push_back(t);
        const Integer z[3] = {t.z1, t.z2, t.z3};
        for (int k = 0; k < 3; ++k) {
            const Integer& a = z[(k + 1) % 3];
            const Integer& b = z[(k + 2) % 3];
            Integer flipped = 3 * a * b - z[k];
            if (flipped <= 0 || flipped > limit) {
                continue;
            }
            MarkovTriple next = sorted(a, b, flipped);
            if (visited.insert(next).second) {
                queue.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

std::set<Integer> markov_numbers(const Integer& limit)
{
    std::set<Integer> out;
    for (const MarkovTriple& t : markov_tree(limit)) {
        out.insert(t.z1);
        out.insert(t.z2);
        out.insert(t.z3);
    }
    return out;
}

bool satisfies_markov_equation(const MarkovTriple& t)
{
    return t.z1 * t.z1 + t.z2 * t.z2 + t.z3 * t.z3 == 3 * t.z1 * t.z2 * t.z3;
}

SpectrumValue spectrum_value(const Integer& z)
{
    if (z < 1 || markov_numbers(z).count(z) == 0) {
        throw Error(ErrorKind::NotMarkovNumber, z.get_str() + " is not a Markov number");
    }
    Rational radicand(Integer(9 * z * z - 4));
    Quad value = Quad::sqrt(radicand) / Quad(z);
    return {value, z};
}

Quad periodic_cut_max(const std::vector<Quotient>& period)
{
    if (period.empty()) {
        throw Error(ErrorKind::BadArgument, "empty period");
    }
    std::size_t n = period.size();
    std::optional<Quad> best;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Quotient> right(n);
        std::vector<Quotient> left(n);
        for (std::size_t k = 0; k < n; ++k) {
            right[k] = period[(i + k) % n];
            left[k] = period[(i + n - 1 - k) % n];
        }
        Quad value = periodic_value({}, right) + periodic_value({0}, left);
        if (!best || compare(value, *best) > 0) {
            best = value;
        }
    }
    return *best;
}

Quad periodic_markov_value(std::string_view period_ab)
{
    Word w = parse_word(period_ab);
    if (w.letters.empty()) {
        throw Error(ErrorKind::BadArgument, "empty period");
    }
    return periodic_cut_max(quotients_of(w));
}

Integer cohn_to_markov(std::string_view period_ab)
{
    Quad m = periodic_markov_value(period_ab);
    Quad sq = m * m;
    if (!sq.is_rational()) {
        throw Error(ErrorKind::InversionNotInteger, "m^2 is irrational for " + std::string(period_ab));
    }
    Rational gap = Rational(9) - sq.to_rational();
    if (gap <= 0) {
        throw Error(ErrorKind::InversionNotInteger, "m >= 3 for " + std::string(period_ab));
    }
    Rational z2 = Rational(4) / gap;
    z2.canonicalize();
    if (z2.get_den() != 1 || !is_perfect_square(z2.get_num())) {
        throw Error(ErrorKind::InversionNotInteger, "4/(9-m^2) = " + z2.get_str() + " is not a square integer");
    }
    Integer z = isqrt(z2.get_num());
    if (markov_numbers(z).count(z) == 0) {
        throw Error(ErrorKind::NotMarkovNumber, z.get_str() + " is not a Markov number");
    }
    return z;
}

MTilde m_tilde(const CFSpec& x)
{
    if (x.period.empty() || x.open) {
        throw Error(ErrorKind::BadArgument, "m_tilde needs an eventually periodic expansion");
    }
    std::size_t h = x.head.size();
    std::size_t p = x.period.size();
    auto s = [&](std::size_t i) { return *x.at(i); };
    auto gamma = [&](std::size_t i) {
        // [s_i; s_{i+1}, ...]
        std::vector<Quotient> head;
        for (std::size_t k = i; k < h; ++k) {
            head.push_back(s(k));
        }
        std::size_t start = std::max(i, h);
        std::vector<Quotient> rot;
        for (std::size_t k = 0; k < p; ++k) {
            rot.push_back(s(start + k));
        }
        return periodic_value(head, rot);
    };
    auto eta = [&](std::size_t n) {
        // [0; s_n, ..., s_1]
        std::vector<Quotient> left;
        for (std::size_t k = 1; k <= n; ++k) {
            left.push_back(s(k));
        }
        return reversed_value(left);
    };

    // From n_start on, every class n mod 2p moves eta by a fixed increasing
    // contraction, so each class is monotone.
    std::size_t n_start = std::max<std::size_t>(h, 1) + 2 * p - 1;
    MTilde best;
    bool have = false;
    for (std::size_t n = 0; n < n_start + 2 * p; ++n) {
        Quad v = gamma(n + 1) + Quad(eta(n));
        if (!have || compare(v, best.value) > 0) {
            best.value = v;
            best.index = n;
            best.attained = true;
            have = true;
        }
    }
    for (std::size_t c = n_start; c < n_start + 2 * p; ++c) {
        Rational e0 = eta(c);
        Rational e1 = eta(c + 2 * p);
        if (e1 <= e0) {
            continue;
        }
        std::vector<Quotient> back;
        for (std::size_t k = 0; k < p; ++k) {
            back.push_back(s(c - k));
        }
        Quad limit = gamma(c + 1) + periodic_value({0}, back);
        if (compare(limit, best.value) > 0) {
            best.value = limit;
            best.attained = false;
            best.index.reset();
        }
    }
    return best;
}

Quad lagrange_value(const CFSpec& x)
{
    if (x.period.empty() || x.open) {
        throw Error(ErrorKind::BadArgument, "lagrange_value needs an eventually periodic expansion");
    }
    return periodic_cut_max(x.period);
}

Interval m_tilde_evidence(const LazyWord& w, std::size_t horizon, std::size_t max_depth)
{
    std::vector<CutReport> reports = classify_range(w, 0, horizon, max_depth);
    Interval out = reports.front().enclosure;
    for (const CutReport& r : reports) {
        if (compare(r.enclosure.lo, out.lo) > 0) {
            out.lo = r.enclosure.lo;
        }
        if (compare(r.enclosure.hi, out.hi) > 0) {
            out.hi = r.enclosure.hi;
        }
    }
    return out;
}

WindowEvidence markov_window_evidence(const BiInfiniteDesc& desc, long long lo, long long hi, std::size_t max_depth)
{
    if (hi < lo) {
        throw Error(ErrorKind::BadArgument, "empty window");
    }
    auto depth = static_cast<long long>(max_depth);
    long long base_lo = (lo - depth) / 2 - 2;
    long long base_hi = (hi + depth) / 2 + 2;
    std::string w = chi(desc.window(base_lo, base_hi));
    long long origin = 2 * base_lo;
    auto letter = [&](long long j) { return static_cast<Quotient>(w[static_cast<std::size_t>(j - origin)] - '0'); };
    Interval base = tail_enclosure({}, 2);

    std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Interval> enc(n);
    std::vector<CutClass> cls(n, CutClass::Undecided);
    parallel_for(n, [&](std::size_t k) {
        long long j = lo + static_cast<long long>(k);
        Mobius left;
        left.push(0);
        Mobius right;
        std::size_t d = 0;
        for (std::size_t target : depth_schedule(max_depth)) {
            for (; d < target; ++d) {
                left.push(letter(j - 1 - static_cast<long long>(d)));
                right.push(letter(j + static_cast<long long>(d)));
            }
            enc[k] = left.apply(base) + right.apply(base);
            if (compare(enc[k].hi, Quad(3L)) <= 0) {
                cls[k] = CutClass::Good;
                return;
            }
            if (compare(enc[k].lo, Quad(3L)) > 0) {
                cls[k] = CutClass::Bad;
                return;
            }
        }
    });
    WindowEvidence ev;
    ev.checked = n;
    std::size_t best = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (cls[k] == CutClass::Bad) {
            ++ev.above;
        } else if (cls[k] == CutClass::Undecided) {
            ++ev.undecided;
            ev.straddling.push_back(lo + static_cast<long long>(k));
        }
        if (compare(enc[k].lo, enc[best].lo) > 0) {
            best = k;
        }
    }
    ev.pos = lo + static_cast<long long>(best);
    ev.max = {enc[best].lo, enc[best].hi};
    for (std::size_t k = 0; k < n; ++k) {
        if (compare(enc[k].hi, ev.max.hi) > 0) {
            ev.max.hi = enc[k].hi;
        }
    }
    return ev;
}

}  // namespace lagrange3
