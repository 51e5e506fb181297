#pragma once

#include "lagrange3/lazy_word.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace lagrange3 {

struct CutPos {
    /// {1,2} letters strictly left of the cut.
    std::size_t left_len = 0;
};

enum class CutClass { Good, Bad, Indeterminate, Undecided };
const char* to_string(CutClass cls);

struct CutReport {
    CutPos pos;
    CutClass cls = CutClass::Undecided;
    /// Right-tail letters used; 0 when the value is exact.
    std::size_t depth = 0;
    Interval enclosure;
    std::optional<Quad> exact;
};

struct FiniteCutReport {
    CutPos pos;
    CutClass cls = CutClass::Indeterminate;
    QuadSum min;
    QuadSum max;
};

/// Refinement depths 16, 32, ... capped at max_depth (always included).
std::vector<std::size_t> depth_schedule(std::size_t max_depth);
constexpr std::size_t kDefaultMaxDepth = 4096;

/// [0; x_k, ..., x_1] for left = x_1 ... x_k.
Rational reversed_value(const std::vector<Quotient>& left);

struct CutValue {
    Interval enclosure;
    std::optional<Quad> exact;
};
/// Value of left | right with `depth` right letters resolved; exact when the
/// right side is eventually periodic.
CutValue cut_value(const std::vector<Quotient>& left, const LazyWord& right, std::size_t depth);

/// lambda(E^T | x F) against lambda(F^T | x E), both sides closed by the
/// same periodic continuation.
bool transpose_value_check(const std::vector<Quotient>& e, Quotient x, const std::vector<Quotient>& f,
                           const std::vector<Quotient>& closure = {1, 2});

/// Extremal values over all two-sided {a,b} extensions of the finite word.
FiniteCutReport classify_finite_cut(const std::vector<Quotient>& word, CutPos pos);

/// A cut on an {a,b} literal that falls between a and b is read as the
/// cut inside the a (2|2); any other position is unchanged.
std::size_t apply_cut_sugar(const Word& literal, std::size_t left_len);

struct CutLiteral {
    Word word;  // {1,2}
    CutPos pos;
};
/// "bb|aab" or "1111|222211".
CutLiteral parse_cut_literal(std::string_view text);

CutReport classify_infinite_cut(const LazyWord& w, CutPos pos, const std::vector<Quotient>& left_context = {},
                                std::size_t max_depth = kDefaultMaxDepth);

struct CountResult {
    std::size_t first = 0;
    std::size_t horizon = 0;
    std::vector<std::size_t> bad;
    std::vector<std::size_t> undecided;
    std::size_t deepest = 0;

    /// Empty when any cut is undecided.
    std::optional<std::size_t> count() const
    {
        return undecided.empty() ? std::optional<std::size_t>(bad.size()) : std::nullopt;
    }
};

/// Classifies every cut with first <= left_len <= horizon.
CountResult count_bad_cuts(const LazyWord& w, std::size_t horizon, std::size_t max_depth = kDefaultMaxDepth,
                           std::size_t first = 0);

/// All cut reports with first <= left_len <= horizon, refined until decided.
std::vector<CutReport> classify_range(const LazyWord& w, std::size_t first, std::size_t horizon,
                                      std::size_t max_depth = kDefaultMaxDepth);

struct Evidence {
    /// Encloses the largest value among Good cuts.
    Interval max;
    CutPos pos;
    std::size_t good = 0;
    std::size_t bad = 0;
    std::size_t undecided = 0;
};

/// Largest Good cut value among cuts with left_len <= horizon; nearby
/// candidates are refined until separated or max_depth is reached.
Evidence lagrange_evidence(const LazyWord& w, std::size_t horizon, std::size_t max_depth = kDefaultMaxDepth);

/// Runs fn(i) for i in [0, n) on a few threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lagrange3
