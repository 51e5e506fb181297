#pragma once

#include "lagrange3/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagrange3 {

using Quotient = std::uint32_t;

/// Finite continued fraction [leading; quotients...].
struct CFWord {
    Integer leading = 0;
    std::vector<Quotient> quotients;
};

struct Convergent {
    Integer p;
    Integer q;
};

Rational eval_cf(const CFWord& w);
/// (p_i, q_i) for i = 0 .. |quotients|.
std::vector<Convergent> convergents(const CFWord& w);

/// t -> (a t + b) / (c t + d). The identity composed with quotients x1..xk
/// gives the map t -> [x1; x2, ..., xk, t].
struct Mobius {
    Integer a = 1;
    Integer b = 0;
    Integer c = 0;
    Integer d = 1;

    static Mobius of(const std::vector<Quotient>& prefix);
    /// Appends one quotient on the inside.
    void push(Quotient x);
    /// +1 when increasing on (0, inf), -1 when decreasing.
    int orientation() const;

    Quad apply(const Quad& t) const;
    Interval apply(const Interval& t) const;
    /// Image of +inf, i.e. a / c.
    Rational at_infinity() const;
};

/// Eventually periodic (or finite, or open-ended) expansion. head[0] is the
/// integer part when head is nonempty; otherwise period[0] is.
struct CFSpec {
    std::vector<Quotient> head;
    std::vector<Quotient> period;
    /// head is only a known prefix of an unspecified continuation.
    bool open = false;

    bool finite() const { return period.empty() && !open; }
    bool periodic() const { return !period.empty(); }
    /// Quotient at index i (0 = integer part); nullopt past the end or past
    /// the known prefix of an open spec.
    std::optional<Quotient> at(std::size_t i) const;
    /// Trailing 1 merged into its predecessor for finite specs.
    CFSpec canonical() const;
};

/// Parses "x0;x1,x2,(p1,p2)" or "(p1,...)"; a trailing "..." marks an open
/// prefix. Brackets are optional.
CFSpec parse_cf(std::string_view text);
std::string render_cf(const CFSpec& spec);

enum class Ordering { Less, Equal, Greater };
const char* to_string(Ordering ord);

struct CompareResult {
    Ordering ordering;
    /// First index where the canonical expansions differ; nullopt if equal.
    std::optional<std::size_t> index;
};

/// Orders two expansions by the alternating rule on their first differing
/// quotient. Throws Error(Undecidable) when the data runs out first.
CompareResult cf_compare(const CFSpec& x, const CFSpec& y);

/// Exact value of an eventually periodic expansion (period nonempty).
Quad periodic_value(const CFSpec& spec);
Quad periodic_value(const std::vector<Quotient>& head, const std::vector<Quotient>& period);
/// Value of a finite expansion as a rational.
Rational finite_value(const std::vector<Quotient>& quotients);

/// Enclosure of [prefix..., c1, c2, ...] over all continuations with
/// 1 <= ci <= max_quotient.
Interval tail_enclosure(const std::vector<Quotient>& prefix, Quotient max_quotient = 2);
Interval mobius_apply(const std::vector<Quotient>& prefix, const Interval& tail);

/// Rotation of `period` that is lexicographically least; used as a cache key.
std::vector<Quotient> least_rotation(const std::vector<Quotient>& period);

}  // namespace lagrange3
