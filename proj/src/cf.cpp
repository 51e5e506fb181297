#include "lagrange3/cf.hpp"

#include "lagrange3/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lagrange3 {

Rational eval_cf(const CFWord& w)
{
    auto conv = convergents(w);
    Rational out(conv.back().p, conv.back().q);
    out.canonicalize();
    return out;
}

std::vector<Convergent> convergents(const CFWord& w)
{
    std::vector<Convergent> out;
    out.reserve(w.quotients.size() + 1);
    Integer p_prev = 1;
    Integer q_prev = 0;
    Integer p = w.leading;
    Integer q = 1;
    out.push_back({p, q});
    for (Quotient x : w.quotients) {
        Integer p_next = p * x + p_prev;
        Integer q_next = q * x + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.push_back({p, q});
    }
    return out;
}

Mobius Mobius::of(const std::vector<Quotient>& prefix)
{
    Mobius m;
    for (Quotient x : prefix) {
        m.push(x);
    }
    return m;
}

void Mobius::push(Quotient x)
{
    // [[a,b],[c,d]] * [[x,1],[1,0]]
    Integer na = a * x + b;
    Integer nc = c * x + d;
    b = std::move(a);
    d = std::move(c);
    a = std::move(na);
    c = std::move(nc);
}

int Mobius::orientation() const
{
    return sgn(Integer(a * d - b * c));
}

Quad Mobius::apply(const Quad& t) const
{
    // t = (p + q√D)/r:  (a p + b r + a q√D) / (c p + d r + c q√D)
    const Integer& D = t.d();
    Integer A = a * t.p() + b * t.r();
    Integer B = a * t.q();
    Integer C = c * t.p() + d * t.r();
    Integer E = c * t.q();
    // (A + B√D)(C - E√D) / (C² - E²D)
    Integer num_p = A * C - B * E * D;
    Integer num_q = B * C - A * E;
    Integer den = C * C - E * E * D;
    return Quad(num_p, num_q, den, D);
}

Interval Mobius::apply(const Interval& t) const
{
    Quad lo = apply(t.lo);
    Quad hi = apply(t.hi);
    if (orientation() < 0) {
        std::swap(lo, hi);
    }
    return {lo, hi};
}

Rational Mobius::at_infinity() const
{
    Rational out(a, c);
    out.canonicalize();
    return out;
}

std::optional<Quotient> CFSpec::at(std::size_t i) const
{
    if (i < head.size()) {
        return head[i];
    }
    if (period.empty()) {
        return std::nullopt;
    }
    return period[(i - head.size()) % period.size()];
}

CFSpec CFSpec::canonical() const
{
    CFSpec out = *this;
    if (!finite()) {
        return out;
    }
    // [..., x, 1] = [..., x + 1]
    while (out.head.size() >= 2 && out.head.back() == 1) {
        out.head.pop_back();
        out.head.back() += 1;
    }
    return out;
}

namespace {

std::vector<Quotient> parse_list(std::string_view text, std::size_t base)
{
    std::vector<Quotient> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') {
            ++i;
        }
        std::size_t start = i;
        Quotient value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + i) {
            throw ParseError(base + start, "expected a quotient");
        }
        i = static_cast<std::size_t>(ptr - text.data());
        out.push_back(value);
        while (i < text.size() && text[i] == ' ') {
            ++i;
        }
        if (i < text.size()) {
            if (text[i] != ',') {
                throw ParseError(base + i, "expected ','");
            }
            ++i;
            if (i == text.size()) {
                throw ParseError(base + i, "trailing ','");
            }
        }
    }
    return out;
}

}  // namespace

CFSpec parse_cf(std::string_view text)
{
    std::size_t base = 0;
    std::size_t first = text.find_first_not_of(' ');
    if (first == std::string_view::npos) {
        throw ParseError(0, "empty continued fraction");
    }
    base = first;
    text = text.substr(first);
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
            throw ParseError(base + text.size(), "missing ']'");
        }
        text = text.substr(1, text.size() - 2);
        ++base;
    }
    CFSpec spec;
    if (text.size() >= 3 && text.substr(text.size() - 3) == "...") {
        spec.open = true;
        text.remove_suffix(3);
        while (!text.empty() && (text.back() == ',' || text.back() == ' ')) {
            text.remove_suffix(1);
        }
    }
    std::size_t paren = text.find('(');
    std::string_view lead = text.substr(0, paren);
    if (paren != std::string_view::npos) {
        if (spec.open) {
            throw ParseError(base + paren, "an open prefix cannot have a period");
        }
        if (text.back() != ')') {
            throw ParseError(base + text.size(), "period must close the expansion");
        }
        std::string_view body = text.substr(paren + 1, text.size() - paren - 2);
        if (body.find_first_of("()") != std::string_view::npos) {
            throw ParseError(base + paren + 1 + body.find_first_of("()"), "nested parenthesis");
        }
        spec.period = parse_list(body, base + paren + 1);
        if (spec.period.empty()) {
            throw ParseError(base + paren + 1, "empty period");
        }
        while (!lead.empty() && (lead.back() == ',' || lead.back() == ' ')) {
            lead.remove_suffix(1);
        }
    }
    std::size_t semi = lead.find(';');
    if (semi != std::string_view::npos) {
        spec.head = parse_list(lead.substr(0, semi), base);
        if (spec.head.size() != 1) {
            throw ParseError(base, "integer part must be a single number");
        }
        std::string_view rest = lead.substr(semi + 1);
        auto more = parse_list(rest, base + semi + 1);
        spec.head.insert(spec.head.end(), more.begin(), more.end());
    } else if (!lead.empty()) {
        spec.head = parse_list(lead, base);
    }
    if (spec.head.empty() && spec.period.empty()) {
        throw ParseError(base, "empty continued fraction");
    }
    for (std::size_t i = 0; i < spec.head.size() + spec.period.size(); ++i) {
        bool in_head = i < spec.head.size();
        Quotient x = in_head ? spec.head[i] : spec.period[i - spec.head.size()];
        if (x == 0 && i != 0) {
            throw ParseError(base, "quotients after the integer part must be positive");
        }
    }
    return spec;
}

std::string render_cf(const CFSpec& spec)
{
    auto join = [](auto begin, auto end) {
        std::string s;
        for (auto it = begin; it != end; ++it) {
            if (!s.empty()) {
                s += ',';
            }
            s += std::to_string(*it);
        }
        return s;
    };
    std::string out;
    if (!spec.head.empty()) {
        out = std::to_string(spec.head[0]) + ";" + join(spec.head.begin() + 1, spec.head.end());
        if (!spec.period.empty()) {
            if (spec.head.size() > 1) {
                out += ',';
            }
            out += "(" + join(spec.period.begin(), spec.period.end()) + ")";
        }
    } else {
        out = "(" + join(spec.period.begin(), spec.period.end()) + ")";
    }
    if (spec.open) {
        out += spec.head.size() > 1 ? ",..." : "...";
    }
    return out;
}

const char* to_string(Ordering ord)
{
    switch (ord) {
    case Ordering::Less:
        return "less";
    case Ordering::Equal:
        return "equal";
    case Ordering::Greater:
        return "greater";
    }
    return "?";
}

CompareResult cf_compare(const CFSpec& x_in, const CFSpec& y_in)
{
    CFSpec x = x_in.canonical();
    CFSpec y = y_in.canonical();
    // Two eventually periodic words agree everywhere once they agree over
    // max head plus lcm of periods.
    std::size_t bound = std::max(x.head.size(), y.head.size());
    bool bounded = !x.open && !y.open;
    if (bounded) {
        std::size_t px = std::max<std::size_t>(x.period.size(), 1);
        std::size_t py = std::max<std::size_t>(y.period.size(), 1);
        bound += std::lcm(px, py);
    }
    for (std::size_t i = 0;; ++i) {
        bool x_end = x.finite() && i >= x.head.size();
        bool y_end = y.finite() && i >= y.head.size();
        if (x_end && y_end) {
            return {Ordering::Equal, std::nullopt};
        }
        if ((x.open && i >= x.head.size()) || (y.open && i >= y.head.size())) {
            throw Error(ErrorKind::Undecidable,
                        "expansions agree on the first " + std::to_string(i) + " quotients; no more data");
        }
        if (bounded && i >= bound && !x.finite() && !y.finite()) {
            return {Ordering::Equal, std::nullopt};
        }
        // A finished expansion behaves as an infinite quotient.
        int diff = 0;
        if (x_end) {
            diff = 1;
        } else if (y_end) {
            diff = -1;
        } else {
            Quotient a = *x.at(i);
            Quotient b = *y.at(i);
            diff = a == b ? 0 : (a > b ? 1 : -1);
        }
        if (diff != 0) {
            if (i % 2 == 1) {
                diff = -diff;
            }
            return {diff > 0 ? Ordering::Greater : Ordering::Less, i};
        }
    }
}

Quad periodic_value(const std::vector<Quotient>& head, const std::vector<Quotient>& period)
{
    if (period.empty()) {
        throw Error(ErrorKind::BadArgument, "periodic_value needs a nonempty period");
    }
    Mobius m = Mobius::of(period);
    // t = (P t + P') / (Q t + Q')  =>  Q t^2 + (Q' - P) t - P' = 0
    const Integer& P = m.a;
    const Integer& P1 = m.b;
    const Integer& Q = m.c;
    const Integer& Q1 = m.d;
    Integer disc = (P - Q1) * (P - Q1) + 4 * P1 * Q;
    Quad t(P - Q1, 1, 2 * Q, disc);
    if (Q == 0) {
        throw Error(ErrorKind::BadArgument, "degenerate period");
    }
    if (head.empty()) {
        return t;
    }
    return Mobius::of(head).apply(t);
}

Quad periodic_value(const CFSpec& spec)
{
    if (spec.open) {
        throw Error(ErrorKind::BadArgument, "open expansion has no exact value");
    }
    if (spec.period.empty()) {
        return Quad(finite_value(spec.head));
    }
    return periodic_value(spec.head, spec.period);
}

Rational finite_value(const std::vector<Quotient>& quotients)
{
    if (quotients.empty()) {
        return Rational(0);
    }
    CFWord w;
    w.leading = quotients[0];
    w.quotients.assign(quotients.begin() + 1, quotients.end());
    return eval_cf(w);
}

Interval tail_enclosure(const std::vector<Quotient>& prefix, Quotient max_quotient)
{
    if (max_quotient < 1) {
        throw Error(ErrorKind::BadArgument, "max_quotient must be positive");
    }
    Interval base;
    if (max_quotient == 1) {
        base = Interval::point(periodic_value({}, {1}));
    } else {
        base = {periodic_value({}, {1, max_quotient}), periodic_value({}, {max_quotient, 1})};
    }
    return mobius_apply(prefix, base);
}

Interval mobius_apply(const std::vector<Quotient>& prefix, const Interval& tail)
{
    return Mobius::of(prefix).apply(tail);
}

std::vector<Quotient> least_rotation(const std::vector<Quotient>& period)
{
    std::vector<Quotient> best = period;
    std::vector<Quotient> rot = period;
    for (std::size_t i = 1; i < period.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) {
            best = rot;
        }
    }
    return best;
}

}  // namespace lagrange3
