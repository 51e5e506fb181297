#pragma once

#include "lagrange3/words.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lagrange3 {

/// One-sided limits of a tilde stream, as {a,b} words.
enum class LimitWord {
    BetaT,          // lim beta_k^T
    Alpha,          // lim alpha_k
    AlphaBetaBeta,  // lim alpha_k beta_k beta_k
};

/// First n {a,b} letters of the limit word, from the shallowest stage long
/// enough to contain them.
std::string limit_prefix(const OperatorStream& stream, LimitWord which, std::size_t n);
/// Smallest stage k whose finite word has at least n {a,b} letters.
std::size_t limit_stage(const OperatorStream& stream, LimitWord which, std::size_t n);
std::string stage_word(const OperatorStream& stream, LimitWord which, std::size_t k);

enum class DescKind { Periodic, Degenerate, OperatorLimit };
enum class DegenerateShape {
    AlphaBetaAlpha,  // ...aaa b aaa...
    BetaAlphaBeta,   // ...bbb a bbb...
};
enum class Center {
    X30,    // lim alpha_i^T | beta_i^T
    X3Inf,  // lim beta_i | alpha_i beta_i beta_i
};
Center parse_center(std::string_view name);
const char* to_string(Center center);

/// A bi-infinite {a,b} word given symbolically over the current pair
/// (alpha, beta). Letter i of the realized word is letter i + offset of the
/// canonical word, whose origin is the start of a period, the start of the
/// isolated letter, or the center marker.
struct BiInfiniteDesc {
    DescKind kind = DescKind::Periodic;
    std::string alpha = "a";
    std::string beta = "b";
    std::string period;
    DegenerateShape shape = DegenerateShape::BetaAlphaBeta;
    std::shared_ptr<const OperatorStream> stream;
    Center center = Center::X30;
    /// Exterior operators already consumed by renormalization.
    std::size_t consumed = 0;
    long long offset = 0;

    static BiInfiniteDesc periodic(std::string period);
    static BiInfiniteDesc degenerate(DegenerateShape shape);
    static BiInfiniteDesc operator_limit(std::shared_ptr<const OperatorStream> stream, Center center);

    BiInfiniteDesc shifted(long long by) const;
    /// Realized base letters with indices in [lo, hi).
    std::string window(long long lo, long long hi) const;
    std::string describe() const;
};

struct RenormStep {
    Op op;
    BiInfiniteDesc next;
};

/// One exterior renormalization step. Throws Constant, EitherOp or
/// NotTypeable.
RenormStep renorm_step(const BiInfiniteDesc& desc);

enum class CharType { I, II };

struct CharacteristicSeq {
    CharType type = CharType::I;
    /// Run lengths of the repeated letter, left to right.
    std::vector<std::size_t> exponents;
    /// The first / last run is cut by the window and is only a lower bound.
    bool left_open = false;
    bool right_open = false;
    /// Both lexicographic run conditions hold wherever the window decides them.
    bool order_ok = true;
};

CharacteristicSeq characteristic_window(const BiInfiniteDesc& desc, long long lo, long long hi);
CharacteristicSeq characteristic_of(std::string_view window);

}  // namespace lagrange3
