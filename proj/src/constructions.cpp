#include "lagrange3/constructions.hpp"

#include <algorithm>
#include <charconv>

namespace lagrange3 {

namespace {

std::vector<Quotient> to_quotients(std::string_view ab, std::size_t length)
{
    std::vector<Quotient> out;
    out.reserve(2 * ab.size());
    for (char c : ab) {
        Quotient x = c == 'a' ? 2 : 1;
        out.push_back(x);
        out.push_back(x);
    }
    out.resize(std::min(out.size(), length));
    return out;
}

std::size_t parse_size(std::string_view text, std::size_t offset)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(offset, "expected a non-negative integer");
    }
    return value;
}

}  // namespace

WitnessSpec parse_witness_spec(std::string_view text)
{
    WitnessSpec spec;
    bool have_n = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view field = text.substr(pos, end - pos);
        if (field.empty()) {
            if (end == text.size()) {
                break;
            }
            throw ParseError(pos, "empty field");
        }
        std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(pos, "expected key=value");
        }
        std::string_view key = field.substr(0, eq);
        std::string_view value = field.substr(eq + 1);
        std::size_t value_at = pos + eq + 1;
        if (key == "n") {
            if (value == "inf") {
                spec.n = std::nullopt;
            } else {
                spec.n = parse_size(value, value_at);
            }
            have_n = true;
        } else if (key == "ops") {
            try {
                spec.ops = parse_ops(value);
            } catch (const ParseError& e) {
                throw ParseError(value_at + e.offset(), "bad operator");
            }
        } else if (key == "cont") {
            try {
                spec.cont = parse_continuation(value);
            } catch (const Error&) {
                throw ParseError(value_at, "unknown continuation (alt, rep, U, V, tm)");
            }
        } else if (key == "variant") {
            if (value == "projection") {
                spec.variant = Variant::Projection;
            } else if (value == "threes") {
                spec.variant = Variant::Threes;
            } else {
                throw ParseError(value_at, "variant must be projection or threes");
            }
        } else {
            throw ParseError(pos, "unknown key '" + std::string(key) + "'");
        }
        pos = end + 1;
    }
    if (!have_n) {
        throw ParseError(text.size(), "missing n=");
    }
    if (!spec.n && spec.variant == Variant::Threes) {
        throw Error(ErrorKind::BadSpec, "the threes variant needs a finite n");
    }
    if (spec.cont == Continuation::Repeat && spec.ops.empty()) {
        throw Error(ErrorKind::BadSpec, "cont=rep needs a nonempty ops seed");
    }
    return spec;
}

std::string render(const WitnessSpec& spec)
{
    std::string out = "n=" + (spec.n ? std::to_string(*spec.n) : std::string("inf"));
    out += ";ops=" + render_ops(spec.ops);
    out += std::string(";cont=") + to_string(spec.cont);
    out += std::string(";variant=") + (spec.variant == Variant::Projection ? "projection" : "threes");
    return out;
}

std::shared_ptr<OperatorStream> make_stream(const WitnessSpec& spec, std::shared_ptr<PairCache> cache)
{
    return std::make_shared<OperatorStream>(spec.ops, spec.cont, std::move(cache));
}

std::vector<Quotient> omega_x30(const OperatorStream& stream, std::size_t length)
{
    return to_quotients(limit_prefix(stream, LimitWord::BetaT, (length + 1) / 2), length);
}

std::vector<Quotient> omega_x3inf(const OperatorStream& stream, std::size_t length)
{
    return to_quotients(limit_prefix(stream, LimitWord::AlphaBetaBeta, (length + 1) / 2), length);
}

LazyWord omega_x30_word(std::shared_ptr<const OperatorStream> stream)
{
    std::string desc = "omega_x30(" + render_ops(stream->seed()) + "+" + to_string(stream->continuation()) + ")";
    return LazyWord::generated([stream](std::size_t n) { return omega_x30(*stream, n); }, desc);
}

LazyWord omega_x3inf_word(std::shared_ptr<const OperatorStream> stream)
{
    std::string desc = "omega_x3inf(" + render_ops(stream->seed()) + "+" + to_string(stream->continuation()) + ")";
    return LazyWord::generated([stream](std::size_t n) { return omega_x3inf(*stream, n); }, desc);
}

std::vector<Quotient> witness_prefix(const WitnessSpec& spec, const OperatorStream& stream)
{
    if (!spec.n) {
        return {};
    }
    std::size_t n = *spec.n;
    if (spec.variant == Variant::Threes) {
        return std::vector<Quotient>(n, 3);
    }
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {2, 2};
    }
    std::string glue = word_mod(transpose(stream.pair(n - 1).alpha), WordMod::Plus);
    return to_quotients(glue, 2 * glue.size());
}

LazyWord witness(const WitnessSpec& spec, std::shared_ptr<const OperatorStream> stream)
{
    if (!spec.n) {
        if (spec.variant == Variant::Threes) {
            throw Error(ErrorKind::BadSpec, "the threes variant needs a finite n");
        }
        return omega_x3inf_word(std::move(stream));
    }
    std::vector<Quotient> head = witness_prefix(spec, *stream);
    LazyWord tail = omega_x30_word(std::move(stream));
    if (head.empty()) {
        return tail;
    }
    return LazyWord::glue(std::move(head), tail);
}

std::size_t stage_horizon(const OperatorStream& stream, std::size_t k)
{
    return 2 * stream.pair(k).beta.size();
}

std::size_t default_horizon(const WitnessSpec& spec, const OperatorStream& stream)
{
    // 3^n and the glued prefixes up to n = 4 put every bad cut well inside
    // beta_4^T; longer projection prefixes need the later stage.
    std::size_t k = 4;
    if (spec.variant == Variant::Projection && spec.n && *spec.n > k) {
        k = *spec.n;
    }
    return stage_horizon(stream, k);
}

BiInfiniteDesc biinfinite_witness(std::shared_ptr<const OperatorStream> stream, Center side)
{
    return BiInfiniteDesc::operator_limit(std::move(stream), side);
}

std::vector<Quotient> degenerate_example(const std::vector<std::size_t>& l, std::size_t length)
{
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == 0) {
            throw Error(ErrorKind::BadArgument, "exponents must be positive");
        }
        if (i > 0 && l[i] <= l[i - 1]) {
            throw Error(ErrorKind::NotIncreasing, "l_" + std::to_string(i + 1) + " = " + std::to_string(l[i]) +
                                                      " does not exceed l_" + std::to_string(i) + " = " +
                                                      std::to_string(l[i - 1]));
        }
    }
    std::vector<Quotient> out;
    for (std::size_t e : l) {
        if (out.size() >= length) {
            break;
        }
        out.insert(out.end(), e, 1);
        out.push_back(2);
        out.push_back(2);
    }
    if (out.size() < length) {
        throw Error(ErrorKind::BadArgument, "exponent list too short for " + std::to_string(length) + " letters");
    }
    out.resize(length);
    return out;
}

Divergence injectivity_check(const std::vector<Op>& ops1, const std::vector<Op>& ops2, Center side,
                             Continuation cont)
{
    if (ops1 == ops2) {
        throw Error(ErrorKind::BadArgument, "injectivity_check needs two different operator words");
    }
    OperatorStream s1(ops1, cont);
    OperatorStream s2(ops2, cont);
    // First operator where the two streams differ; a difference at op j
    // shows up by stage j + 1.
    std::size_t j = 0;
    while (s1.at(j) == s2.at(j)) {
        if (++j > 256) {
            throw Error(ErrorKind::NoDivergenceFound, "streams agree on 256 operators");
        }
    }
    LimitWord which = side == Center::X30 ? LimitWord::BetaT : LimitWord::AlphaBetaBeta;
    Divergence out;
    for (std::size_t k = 0; k <= j + 1; ++k) {
        std::string w1 = stage_word(s1, which, k);
        std::string w2 = stage_word(s2, which, k);
        out.horizon = 2 * std::max(w1.size(), w2.size());
        auto [it1, it2] = std::mismatch(w1.begin(), w1.begin() + static_cast<std::ptrdiff_t>(std::min(w1.size(), w2.size())),
                                        w2.begin());
        std::size_t i = static_cast<std::size_t>(it1 - w1.begin());
        if (i < std::min(w1.size(), w2.size())) {
            out.index = 2 * i;
            out.stage = k;
            return out;
        }
    }
    throw Error(ErrorKind::NoDivergenceFound, render_ops(ops1) + " and " + render_ops(ops2) +
                                                  " agree on the first " + std::to_string(out.horizon) + " letters");
}

CutPos stage_bad_cut_locator(std::shared_ptr<const OperatorStream> stream, std::size_t stage, std::size_t max_depth)
{
    if (stage < 1) {
        throw Error(ErrorKind::BadArgument, "stage must be at least 1");
    }
    const WordPair& p = stream->pair(stage);
    std::size_t lo = 2 * p.alpha.size() + 1;
    std::size_t hi = 2 * (p.alpha.size() + p.beta.size()) - 1;
    LazyWord w = omega_x3inf_word(stream);
    for (const CutReport& r : classify_range(w, lo, hi, max_depth)) {
        if (r.cls == CutClass::Bad) {
            return r.pos;
        }
    }
    throw Error(ErrorKind::NotFound, "no Bad cut inside the first beta_" + std::to_string(stage));
}

WordSpec parse_word_spec(std::string_view text)
{
    auto literal = [](std::string_view s, std::size_t offset) {
        try {
            return parse_word(s);
        } catch (const ParseError& e) {
            throw ParseError(offset + e.offset(), "bad word literal");
        }
    };
    if (text.substr(0, 9) == "periodic:") {
        std::string_view body = text.substr(9);
        std::size_t slash = body.find('/');
        if (slash == std::string_view::npos) {
            throw ParseError(text.size(), "periodic spec needs HEAD/PERIOD");
        }
        PeriodicSpec spec{literal(body.substr(0, slash), 9), literal(body.substr(slash + 1), 10 + slash)};
        if (spec.period.letters.empty()) {
            throw ParseError(10 + slash, "empty period");
        }
        if (!spec.head.letters.empty() && spec.head.alphabet != spec.period.alphabet) {
            throw ParseError(10 + slash, "head and period use different alphabets");
        }
        spec.head.alphabet = spec.period.alphabet;
        return spec;
    }
    if (text.substr(0, 5) == "open:") {
        return OpenSpec{literal(text.substr(5), 5)};
    }
    if (text.find('=') != std::string_view::npos) {
        return parse_witness_spec(text);
    }
    throw ParseError(0, "expected periodic:, open: or a witness spec");
}

std::string render(const WordSpec& spec)
{
    if (const auto* p = std::get_if<PeriodicSpec>(&spec)) {
        return "periodic:" + p->head.letters + "/" + p->period.letters;
    }
    if (const auto* o = std::get_if<OpenSpec>(&spec)) {
        return "open:" + o->prefix.letters;
    }
    return render(std::get<WitnessSpec>(spec));
}

LazyWord make_lazy_word(const WordSpec& spec, std::shared_ptr<PairCache> cache)
{
    if (const auto* p = std::get_if<PeriodicSpec>(&spec)) {
        return LazyWord::eventually_periodic(quotients_of(p->head), quotients_of(p->period));
    }
    if (const auto* o = std::get_if<OpenSpec>(&spec)) {
        return LazyWord::open_prefix(quotients_of(o->prefix));
    }
    const auto& w = std::get<WitnessSpec>(spec);
    return witness(w, make_stream(w, std::move(cache)));
}

std::optional<Word> literal_of(const WordSpec& spec, std::size_t min_letters)
{
    if (const auto* p = std::get_if<PeriodicSpec>(&spec)) {
        if (p->period.alphabet != Alphabet::AB) {
            return std::nullopt;
        }
        Word w{Alphabet::AB, p->head.letters};
        while (w.letters.size() < min_letters) {
            w.letters += p->period.letters;
        }
        return w;
    }
    if (const auto* o = std::get_if<OpenSpec>(&spec)) {
        if (o->prefix.alphabet == Alphabet::AB) {
            return o->prefix;
        }
    }
    return std::nullopt;
}

}  // namespace lagrange3
