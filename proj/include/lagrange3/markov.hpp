#pragma once

#include "lagrange3/cuts.hpp"

#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace lagrange3 {

struct MarkovTriple {
    Integer z1 = 1;
    Integer z2 = 1;
    Integer z3 = 1;

    bool operator==(const MarkovTriple&) const = default;
};

/// All triples z1 <= z2 <= z3 <= limit, ordered by (z3, z2, z1).
std::vector<MarkovTriple> markov_tree(const Integer& limit);
/// Every coordinate of every triple up to `limit`.
std::set<Integer> markov_numbers(const Integer& limit);
bool satisfies_markov_equation(const MarkovTriple& t);

struct SpectrumValue {
    Quad value;
    Integer z = 1;
};

/// sqrt(9 z^2 - 4) / z; throws NotMarkovNumber.
SpectrumValue spectrum_value(const Integer& z);

/// Largest cut value of the bi-infinite word period^inf.
Quad periodic_cut_max(const std::vector<Quotient>& period);
Quad periodic_markov_value(std::string_view period_ab);
/// Inverts the Markov value of a Cohn word back to z; throws
/// InversionNotInteger or NotMarkovNumber.
Integer cohn_to_markov(std::string_view period_ab);

struct MTilde {
    Quad value;
    bool attained = false;
    /// Index n where the supremum is reached, when attained.
    std::optional<std::size_t> index;
};

/// sup over n >= 0 of [x_{n+1}; x_{n+2}, ...] + [0; x_n, ..., x_1] for an
/// eventually periodic x = [x_0; x_1, ...].
MTilde m_tilde(const CFSpec& x);
/// Limsup of the same quantity (the Lagrange value).
Quad lagrange_value(const CFSpec& x);

/// Encloses the largest cut value with left_len <= horizon.
Interval m_tilde_evidence(const LazyWord& w, std::size_t horizon, std::size_t max_depth = kDefaultMaxDepth);

struct WindowEvidence {
    Interval max;
    long long pos = 0;
    std::size_t checked = 0;
    std::size_t above = 0;
    std::size_t undecided = 0;
    /// Positions whose enclosure still contains 3 at full depth.
    std::vector<long long> straddling;
};

/// Two-sided cut values of a bi-infinite word at {1,2} positions in
/// [lo, hi], each refined until it is on one side of 3.
WindowEvidence markov_window_evidence(const BiInfiniteDesc& desc, long long lo, long long hi,
                                      std::size_t max_depth = 256);

}  // namespace lagrange3
