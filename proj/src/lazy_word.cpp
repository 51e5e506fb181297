#include "lagrange3/lazy_word.hpp"

#include <mutex>

namespace lagrange3 {

struct LazyWord::State {
    std::string description;
    Quotient bound = 2;
    Generator gen;
    std::optional<std::size_t> limit;
    bool periodic = false;
    std::vector<Quotient> head;
    std::vector<Quotient> period;

    std::mutex mutex;
    std::vector<Quotient> cache;

    void extend(std::size_t n)
    {
        if (cache.size() >= n) {
            return;
        }
        if (periodic) {
            while (cache.size() < n) {
                std::size_t i = cache.size();
                cache.push_back(i < head.size() ? head[i] : period[(i - head.size()) % period.size()]);
            }
            return;
        }
        if (limit) {
            return;
        }
        // Grow geometrically to keep generator calls rare.
        std::size_t want = std::max(n, cache.size() * 2);
        std::vector<Quotient> fresh = gen(want);
        if (fresh.size() < n) {
            throw Error(ErrorKind::MismatchBug, "generator returned a short prefix for " + description);
        }
        cache = std::move(fresh);
    }
};

LazyWord LazyWord::generated(Generator gen, std::string description, Quotient bound)
{
    LazyWord w;
    w.state_ = std::make_shared<State>();
    w.state_->gen = std::move(gen);
    w.state_->description = std::move(description);
    w.state_->bound = bound;
    return w;
}

LazyWord LazyWord::eventually_periodic(std::vector<Quotient> head, std::vector<Quotient> period)
{
    if (period.empty()) {
        throw Error(ErrorKind::BadArgument, "eventually periodic word needs a period");
    }
    LazyWord w;
    w.state_ = std::make_shared<State>();
    w.state_->periodic = true;
    CFSpec spec{head, period, false};
    spec.head.insert(spec.head.begin(), 0);
    w.state_->description = "periodic " + render_cf(spec);
    w.state_->head = std::move(head);
    w.state_->period = std::move(period);
    Quotient m = 1;
    for (Quotient x : w.state_->period) {
        m = std::max(m, x);
    }
    w.state_->bound = m;
    return w;
}

LazyWord LazyWord::open_prefix(std::vector<Quotient> prefix, Quotient bound)
{
    LazyWord w;
    w.state_ = std::make_shared<State>();
    w.state_->limit = prefix.size();
    w.state_->bound = bound;
    CFSpec spec{prefix, {}, true};
    spec.head.insert(spec.head.begin(), 0);
    w.state_->description = "open " + render_cf(spec);
    w.state_->cache = std::move(prefix);
    return w;
}

LazyWord LazyWord::glue(std::vector<Quotient> head, const LazyWord& tail)
{
    const State& t = *tail.state_;
    if (t.periodic) {
        std::vector<Quotient> h = head;
        h.insert(h.end(), t.head.begin(), t.head.end());
        return eventually_periodic(std::move(h), t.period);
    }
    if (t.limit) {
        std::vector<Quotient> h = head;
        h.insert(h.end(), t.cache.begin(), t.cache.end());
        return open_prefix(std::move(h), t.bound);
    }
    Quotient bound = t.bound;
    std::string desc;
    for (Quotient x : head) {
        desc += std::to_string(x);
    }
    desc += "." + t.description;
    LazyWord inner = tail;
    std::size_t hs = head.size();
    return generated(
        [head = std::move(head), inner, hs](std::size_t n) {
            std::vector<Quotient> out = head;
            if (n > hs) {
                std::vector<Quotient> rest = inner.prefix(n - hs);
                out.insert(out.end(), rest.begin(), rest.end());
            }
            return out;
        },
        desc, bound);
}

LazyWord LazyWord::projection(const BiInfiniteDesc& desc)
{
    if (desc.kind == DescKind::Periodic) {
        // One realized period starting at the offset.
        long long len = 0;
        for (char c : desc.period) {
            len += static_cast<long long>(c == 'a' ? desc.alpha.size() : desc.beta.size());
        }
        std::vector<Quotient> period;
        for (char c : chi(desc.window(0, len))) {
            period.push_back(static_cast<Quotient>(c - '0'));
        }
        return eventually_periodic({}, std::move(period));
    }
    BiInfiniteDesc copy = desc;
    return generated(
        [copy](std::size_t n) {
            std::string w = copy.window(0, static_cast<long long>((n + 1) / 2));
            std::vector<Quotient> out;
            out.reserve(2 * w.size());
            for (char c : chi(w)) {
                out.push_back(static_cast<Quotient>(c - '0'));
            }
            return out;
        },
        "projection of " + desc.describe(), 2);
}

Quotient LazyWord::at(std::size_t i) const
{
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->extend(i + 1);
    if (i >= state_->cache.size()) {
        throw Error(ErrorKind::Undecidable, "letter " + std::to_string(i) + " is beyond the known prefix");
    }
    return state_->cache[i];
}

std::vector<Quotient> LazyWord::prefix(std::size_t n) const
{
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->extend(n);
    if (n > state_->cache.size()) {
        throw Error(ErrorKind::Undecidable, "only " + std::to_string(state_->cache.size()) + " letters are known");
    }
    return {state_->cache.begin(), state_->cache.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<Quotient> LazyWord::available(std::size_t n) const
{
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->extend(n);
    n = std::min(n, state_->cache.size());
    return {state_->cache.begin(), state_->cache.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::optional<std::size_t> LazyWord::known_limit() const
{
    return state_->limit;
}

Quotient LazyWord::continuation_bound() const
{
    return state_->bound;
}

std::optional<std::pair<std::vector<Quotient>, std::vector<Quotient>>> LazyWord::periodic_tail(std::size_t i) const
{
    const State& s = *state_;
    if (!s.periodic) {
        return std::nullopt;
    }
    if (i < s.head.size()) {
        return std::make_pair(std::vector<Quotient>(s.head.begin() + static_cast<std::ptrdiff_t>(i), s.head.end()),
                              s.period);
    }
    std::size_t phase = (i - s.head.size()) % s.period.size();
    std::vector<Quotient> rotated(s.period.begin() + static_cast<std::ptrdiff_t>(phase), s.period.end());
    rotated.insert(rotated.end(), s.period.begin(), s.period.begin() + static_cast<std::ptrdiff_t>(phase));
    return std::make_pair(std::vector<Quotient>{}, rotated);
}

const std::string& LazyWord::description() const
{
    return state_->description;
}

std::vector<Quotient> quotients_of(const Word& w)
{
    Word expanded = chi_expand(w);
    std::vector<Quotient> out;
    out.reserve(expanded.letters.size());
    for (char c : expanded.letters) {
        out.push_back(static_cast<Quotient>(c - '0'));
    }
    return out;
}

}  // namespace lagrange3
