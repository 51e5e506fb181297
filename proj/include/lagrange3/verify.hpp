#pragma once

#include "lagrange3/constructions.hpp"
#include "lagrange3/markov.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lagrange3 {

enum class Outcome { Pass, Fail, Undecided };
const char* to_string(Outcome outcome);

struct CaseResult {
    std::string suite;
    std::string name;
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

struct VerifyOptions {
    /// Bar tree depth for identities, Cohn depth for markov. 0 picks the
    /// suite default (10 and 6).
    std::size_t depth = 0;
    /// Longest tilde operator word used by identities and injectivity.
    std::size_t tilde_length = 5;
    /// Largest n for the projection counts.
    std::size_t max_n = 4;
    std::size_t max_depth = kDefaultMaxDepth;
    std::uint64_t seed = 20240917;
    std::size_t samples = 20;
};

const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all". Results keep case order.
std::vector<CaseResult> run_suite(std::string_view suite, const VerifyOptions& opts);

std::vector<CaseResult> verify_identities(const VerifyOptions& opts);
std::vector<CaseResult> verify_cuts(const VerifyOptions& opts);
std::vector<CaseResult> verify_markov(const VerifyOptions& opts);
std::vector<CaseResult> verify_counts(const VerifyOptions& opts);
std::vector<CaseResult> verify_injectivity(const VerifyOptions& opts);

/// Refinement depth for scanning every cut up to `horizon`: cuts near the
/// end of a stage word can need about twice the horizon.
std::size_t evidence_depth(std::size_t horizon, std::size_t max_depth = kDefaultMaxDepth);

/// Brute-force count of n in [0, horizon] with |x - p_n/q_n| < 1/(3 q_n^2)
/// for x = [0; head, period, period, ...], in exact arithmetic.
std::size_t count_close_convergents(const std::vector<Quotient>& head, const std::vector<Quotient>& period,
                                    std::size_t horizon);

/// Every tilde operator word with 1 <= length <= max_len, shortest first.
std::vector<std::vector<Op>> all_op_words(std::size_t max_len, bool include_empty = false);

}  // namespace lagrange3
