#include "lagrange3/biinfinite.hpp"

#include <algorithm>

namespace lagrange3 {

namespace {

long long floor_mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

std::string realize(std::string_view symbolic, const std::string& alpha, const std::string& beta)
{
    std::string out;
    for (char c : symbolic) {
        out += c == 'a' ? alpha : beta;
    }
    return out;
}

bool cyclic_has(const std::string& period, char c)
{
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (period[i] == c && period[(i + 1) % period.size()] == c) {
            return true;
        }
    }
    return false;
}

// Returns 1 / 0 / -1 comparing x against y lexicographically on the common
// length; 0 also when either side is empty.
int lex(const std::vector<long long>& x, const std::vector<long long>& y)
{
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) {
            return x[i] < y[i] ? -1 : 1;
        }
    }
    return 0;
}

}  // namespace

std::string stage_word(const OperatorStream& stream, LimitWord which, std::size_t k)
{
    const WordPair& p = stream.pair(k);
    switch (which) {
    case LimitWord::BetaT:
        return transpose(p.beta);
    case LimitWord::Alpha:
        return p.alpha;
    case LimitWord::AlphaBetaBeta:
        return p.alpha + p.beta + p.beta;
    }
    return {};
}

std::size_t limit_stage(const OperatorStream& stream, LimitWord which, std::size_t n)
{
    std::size_t k = 0;
    for (;;) {
        const WordPair& p = stream.pair(k);
        std::size_t len = which == LimitWord::BetaT   ? p.beta.size()
                          : which == LimitWord::Alpha ? p.alpha.size()
                                                      : p.alpha.size() + 2 * p.beta.size();
        if (len >= n) {
            return k;
        }
        ++k;
    }
}

std::string limit_prefix(const OperatorStream& stream, LimitWord which, std::size_t n)
{
    std::string w = stage_word(stream, which, limit_stage(stream, which, n));
    w.resize(n);
    return w;
}

Center parse_center(std::string_view name)
{
    if (name == "x30") {
        return Center::X30;
    }
    if (name == "x3inf") {
        return Center::X3Inf;
    }
    throw Error(ErrorKind::BadArgument, "side must be x30 or x3inf, got '" + std::string(name) + "'");
}

const char* to_string(Center center)
{
    return center == Center::X30 ? "x30" : "x3inf";
}

BiInfiniteDesc BiInfiniteDesc::periodic(std::string period)
{
    if (period.empty() || period.find_first_not_of("ab") != std::string::npos) {
        throw Error(ErrorKind::BadArgument, "period must be a nonempty {a,b} word");
    }
    BiInfiniteDesc d;
    d.kind = DescKind::Periodic;
    d.period = std::move(period);
    return d;
}

BiInfiniteDesc BiInfiniteDesc::degenerate(DegenerateShape shape)
{
    BiInfiniteDesc d;
    d.kind = DescKind::Degenerate;
    d.shape = shape;
    return d;
}

BiInfiniteDesc BiInfiniteDesc::operator_limit(std::shared_ptr<const OperatorStream> stream, Center center)
{
    BiInfiniteDesc d;
    d.kind = DescKind::OperatorLimit;
    d.stream = std::move(stream);
    d.center = center;
    return d;
}

BiInfiniteDesc BiInfiniteDesc::shifted(long long by) const
{
    BiInfiniteDesc d = *this;
    d.offset += by;
    return d;
}

std::string BiInfiniteDesc::window(long long lo, long long hi) const
{
    std::string out;
    if (hi <= lo) {
        return out;
    }
    lo += offset;
    hi += offset;
    out.reserve(static_cast<std::size_t>(hi - lo));
    switch (kind) {
    case DescKind::Periodic: {
        std::string p = realize(period, alpha, beta);
        auto n = static_cast<long long>(p.size());
        for (long long j = lo; j < hi; ++j) {
            out += p[static_cast<std::size_t>(floor_mod(j, n))];
        }
        return out;
    }
    case DescKind::Degenerate: {
        const std::string& repeated = shape == DegenerateShape::AlphaBetaAlpha ? alpha : beta;
        const std::string& single = shape == DegenerateShape::AlphaBetaAlpha ? beta : alpha;
        auto r = static_cast<long long>(repeated.size());
        auto s = static_cast<long long>(single.size());
        for (long long j = lo; j < hi; ++j) {
            if (j >= 0 && j < s) {
                out += single[static_cast<std::size_t>(j)];
            } else if (j >= s) {
                out += repeated[static_cast<std::size_t>((j - s) % r)];
            } else {
                out += repeated[static_cast<std::size_t>(floor_mod(j, r))];
            }
        }
        return out;
    }
    case DescKind::OperatorLimit: {
        LimitWord right = center == Center::X30 ? LimitWord::BetaT : LimitWord::AlphaBetaBeta;
        LimitWord left = center == Center::X30 ? LimitWord::Alpha : LimitWord::BetaT;
        std::string rw = hi > 0 ? limit_prefix(*stream, right, static_cast<std::size_t>(hi)) : std::string();
        std::string lw = lo < 0 ? limit_prefix(*stream, left, static_cast<std::size_t>(-lo)) : std::string();
        for (long long j = lo; j < hi; ++j) {
            out += j >= 0 ? rw[static_cast<std::size_t>(j)] : lw[static_cast<std::size_t>(-1 - j)];
        }
        return out;
    }
    }
    return out;
}

std::string BiInfiniteDesc::describe() const
{
    std::string pair = "(" + alpha + "," + beta + ")";
    std::string shift = offset == 0 ? "" : " shifted by " + std::to_string(offset);
    switch (kind) {
    case DescKind::Periodic:
        return "(" + period + ")^inf over " + pair + shift;
    case DescKind::Degenerate:
        return std::string(shape == DegenerateShape::AlphaBetaAlpha ? "a^inf b a^inf" : "b^inf a b^inf") + " over " +
               pair + shift;
    case DescKind::OperatorLimit:
        return std::string("limit ") + to_string(center) + " of " + render_ops(stream->seed()) + "+" +
               to_string(stream->continuation()) + " after " + std::to_string(consumed) + " steps" + shift;
    }
    return {};
}

RenormStep renorm_step(const BiInfiniteDesc& desc)
{
    BiInfiniteDesc next = desc;
    switch (desc.kind) {
    case DescKind::OperatorLimit: {
        Op op = desc.stream->bar_at(desc.consumed);
        WordPair p = pair_step({desc.alpha, desc.beta, {Family::Bar, {}}}, op);
        next.alpha = p.alpha;
        next.beta = p.beta;
        next.consumed += 1;
        return {op, next};
    }
    case DescKind::Degenerate:
        if (desc.shape == DegenerateShape::BetaAlphaBeta) {
            next.alpha = desc.alpha + desc.beta;
            return {Op::U, next};
        }
        next.beta = desc.alpha + desc.beta;
        next.offset += static_cast<long long>(desc.alpha.size());
        return {Op::V, next};
    case DescKind::Periodic:
        break;
    }

    const std::string& p = desc.period;
    if (p.find('a') == std::string::npos || p.find('b') == std::string::npos) {
        throw Error(ErrorKind::Constant, "constant word (" + p + ")^inf");
    }
    bool aa = cyclic_has(p, 'a');
    bool bb = cyclic_has(p, 'b');
    if (aa && bb) {
        throw Error(ErrorKind::NotTypeable, "period " + p + " contains both aa and bb");
    }
    if (!aa && !bb) {
        throw Error(ErrorKind::EitherOp, "alternating word (ab)^inf admits both operators");
    }
    // Rotate so the period starts with a right after a b.
    std::size_t s = 0;
    while (!(p[s] == 'a' && p[(s + p.size() - 1) % p.size()] == 'b')) {
        ++s;
    }
    std::string rotated = p.substr(s) + p.substr(0, s);
    auto shift = static_cast<long long>(realize(p.substr(0, s), desc.alpha, desc.beta).size());
    next.offset = desc.offset - shift;

    std::string symbolic;
    Op op;
    if (!aa) {
        // Every a is followed by b: ab -> a', b -> b'.
        op = Op::U;
        for (std::size_t i = 0; i < rotated.size();) {
            if (rotated[i] == 'a') {
                symbolic += 'a';
                i += 2;
            } else {
                symbolic += 'b';
                i += 1;
            }
        }
        next.alpha = desc.alpha + desc.beta;
    } else {
        // Every b is preceded by a: ab -> b', a -> a'.
        op = Op::V;
        for (std::size_t i = 0; i < rotated.size();) {
            if (i + 1 < rotated.size() && rotated[i] == 'a' && rotated[i + 1] == 'b') {
                symbolic += 'b';
                i += 2;
            } else {
                symbolic += 'a';
                i += 1;
            }
        }
        next.beta = desc.alpha + desc.beta;
    }
    next.period = symbolic;
    return {op, next};
}

CharacteristicSeq characteristic_of(std::string_view w)
{
    bool has_a = w.find('a') != std::string_view::npos;
    bool has_b = w.find('b') != std::string_view::npos;
    if (!has_a || !has_b) {
        throw Error(ErrorKind::NotTypeable, "window is constant");
    }
    bool aa = w.find("aa") != std::string_view::npos;
    bool bb = w.find("bb") != std::string_view::npos;
    if (aa && bb) {
        throw Error(ErrorKind::NotTypeable, "window contains both aa and bb");
    }
    CharacteristicSeq seq;
    seq.type = aa ? CharType::II : CharType::I;
    char sep = seq.type == CharType::I ? 'a' : 'b';

    std::vector<std::size_t> pieces{0};
    for (char c : w) {
        if (c == sep) {
            pieces.push_back(0);
        } else {
            ++pieces.back();
        }
    }
    seq.left_open = w.front() != sep;
    seq.right_open = w.back() != sep;
    // Empty boundary pieces lie outside the window.
    std::size_t first = seq.left_open ? 0 : 1;
    std::size_t last = seq.right_open ? pieces.size() : pieces.size() - 1;
    seq.exponents.assign(pieces.begin() + static_cast<std::ptrdiff_t>(first),
                         pieces.begin() + static_cast<std::ptrdiff_t>(last));

    // Run conditions, restricted to runs fully inside the window.
    std::size_t lo = seq.left_open ? 1 : 0;
    std::size_t hi = seq.exponents.size() - (seq.right_open && !seq.exponents.empty() ? 1 : 0);
    for (std::size_t i = lo; i < hi; ++i) {
        std::vector<long long> fwd{static_cast<long long>(seq.exponents[i]) - 1};
        std::vector<long long> back{static_cast<long long>(seq.exponents[i]) - 1};
        std::vector<long long> left_seq;
        std::vector<long long> right_seq;
        for (std::size_t j = i + 1; j < hi; ++j) {
            fwd.push_back(static_cast<long long>(seq.exponents[j]));
            right_seq.push_back(static_cast<long long>(seq.exponents[j]));
        }
        for (std::size_t j = i; j-- > lo;) {
            back.push_back(static_cast<long long>(seq.exponents[j]));
            left_seq.push_back(static_cast<long long>(seq.exponents[j]));
        }
        if (!left_seq.empty() && lex(fwd, left_seq) > 0) {
            seq.order_ok = false;
        }
        if (!right_seq.empty() && lex(back, right_seq) > 0) {
            seq.order_ok = false;
        }
    }
    return seq;
}

CharacteristicSeq characteristic_window(const BiInfiniteDesc& desc, long long lo, long long hi)
{
    if (hi <= lo) {
        throw Error(ErrorKind::BadArgument, "empty window");
    }
    return characteristic_of(desc.window(lo, hi));
}

}  // namespace lagrange3
