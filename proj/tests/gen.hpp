#pragma once

#include "lagrange3/cf.hpp"
#include "lagrange3/words.hpp"

#include <random>
#include <string>
#include <vector>

// Small seeded generators for the property tests.
namespace gen {

inline constexpr std::uint64_t kSeed = 20240917;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed = kSeed) : eng(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng); }
    std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    std::vector<lagrange3::Quotient> quotients(std::size_t len, lagrange3::Quotient max_q = 2)
    {
        std::vector<lagrange3::Quotient> out(len);
        for (auto& x : out) {
            x = static_cast<lagrange3::Quotient>(range(1, max_q));
        }
        return out;
    }

    std::string ab(std::size_t len)
    {
        std::string s(len, 'a');
        for (auto& c : s) {
            c = below(2) ? 'b' : 'a';
        }
        return s;
    }

    std::vector<lagrange3::Op> ops(std::size_t len)
    {
        std::vector<lagrange3::Op> out(len);
        for (auto& o : out) {
            o = below(2) ? lagrange3::Op::V : lagrange3::Op::U;
        }
        return out;
    }
};

}  // namespace gen
