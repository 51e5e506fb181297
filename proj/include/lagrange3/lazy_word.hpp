#pragma once

#include "lagrange3/biinfinite.hpp"
#include "lagrange3/cf.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lagrange3 {

/// One-sided infinite word of quotients with on-demand prefix access. The
/// word w1 w2 ... stands for x = [0; w1, w2, ...]. Prefix access is cached and
/// safe to use from several threads.
class LazyWord {
public:
    /// Must return at least `min_len` letters; outputs must be mutually
    /// consistent prefixes.
    using Generator = std::function<std::vector<Quotient>(std::size_t min_len)>;

    static LazyWord generated(Generator gen, std::string description, Quotient bound = 2);
    static LazyWord eventually_periodic(std::vector<Quotient> head, std::vector<Quotient> period);
    /// Known prefix, continuation unknown except 1 <= letter <= bound.
    static LazyWord open_prefix(std::vector<Quotient> prefix, Quotient bound = 2);
    static LazyWord glue(std::vector<Quotient> head, const LazyWord& tail);
    /// Letters at indices >= 0 of the realized word, through chi.
    static LazyWord projection(const BiInfiniteDesc& desc);

    Quotient at(std::size_t i) const;
    /// First n letters; throws Undecidable past the known prefix.
    std::vector<Quotient> prefix(std::size_t n) const;
    /// Up to n letters, fewer if the known prefix is shorter.
    std::vector<Quotient> available(std::size_t n) const;
    std::optional<std::size_t> known_limit() const;
    /// Upper bound on letters not yet generated.
    Quotient continuation_bound() const;
    /// Exact (head, period) of the suffix starting at index i.
    std::optional<std::pair<std::vector<Quotient>, std::vector<Quotient>>> periodic_tail(std::size_t i) const;
    const std::string& description() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Letters of a {1,2} or {a,b} literal as quotients.
std::vector<Quotient> quotients_of(const Word& w);

}  // namespace lagrange3
