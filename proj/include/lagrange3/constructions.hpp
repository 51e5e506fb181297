#pragma once

#include "lagrange3/cuts.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lagrange3 {

enum class Variant { Projection, Threes };

struct WitnessSpec {
    /// nullopt stands for n = infinity.
    std::optional<std::size_t> n = 0;
    std::vector<Op> ops;
    Continuation cont = Continuation::Alternate;
    Variant variant = Variant::Projection;

    bool operator==(const WitnessSpec&) const = default;
};

/// "n=2;ops=UV;cont=alt;variant=projection". Keys may come in any order;
/// ops, cont and variant are optional. n accepts "inf".
WitnessSpec parse_witness_spec(std::string_view text);
std::string render(const WitnessSpec& spec);

std::shared_ptr<OperatorStream> make_stream(const WitnessSpec& spec, std::shared_ptr<PairCache> cache = nullptr);

/// First L {1,2} letters of lim beta_n^T and lim alpha_n beta_n beta_n.
std::vector<Quotient> omega_x30(const OperatorStream& stream, std::size_t length);
std::vector<Quotient> omega_x3inf(const OperatorStream& stream, std::size_t length);
LazyWord omega_x30_word(std::shared_ptr<const OperatorStream> stream);
LazyWord omega_x3inf_word(std::shared_ptr<const OperatorStream> stream);

/// Finite part placed in front of lim beta_n^T.
std::vector<Quotient> witness_prefix(const WitnessSpec& spec, const OperatorStream& stream);
LazyWord witness(const WitnessSpec& spec, std::shared_ptr<const OperatorStream> stream);

/// |beta_k^T| in {1,2} letters.
std::size_t stage_horizon(const OperatorStream& stream, std::size_t k);
/// Horizon used when a witness is counted without an explicit one.
std::size_t default_horizon(const WitnessSpec& spec, const OperatorStream& stream);

BiInfiniteDesc biinfinite_witness(std::shared_ptr<const OperatorStream> stream, Center side);

/// 1^{l1} 22 1^{l2} 22 ...; throws NotIncreasing.
std::vector<Quotient> degenerate_example(const std::vector<std::size_t>& l, std::size_t length);

struct Divergence {
    /// 0-based {1,2} index of the first difference.
    std::size_t index = 0;
    /// Search bound in {1,2} letters.
    std::size_t horizon = 0;
    /// Stage whose words first showed the difference.
    std::size_t stage = 0;

    std::size_t position() const { return index + 1; }
};

/// Both seeds are continued by the same rule (Thue-Morse by default, which
/// keeps distinct seeds distinct as infinite streams).
Divergence injectivity_check(const std::vector<Op>& ops1, const std::vector<Op>& ops2, Center side,
                             Continuation cont = Continuation::ThueMorse);

/// A Bad cut of lim alpha_n beta_n beta_n strictly inside the first beta_n.
CutPos stage_bad_cut_locator(std::shared_ptr<const OperatorStream> stream, std::size_t stage,
                             std::size_t max_depth = kDefaultMaxDepth);

/// Text forms understood by the command line:
///   periodic:HEAD/PERIOD   eventually periodic literal ({a,b} or {1,2})
///   open:PREFIX            known prefix, {1,2} continuation
///   n=...;ops=...          witness spec
struct PeriodicSpec {
    Word head;
    Word period;
    bool operator==(const PeriodicSpec&) const = default;
};
struct OpenSpec {
    Word prefix;
    bool operator==(const OpenSpec&) const = default;
};
using WordSpec = std::variant<PeriodicSpec, OpenSpec, WitnessSpec>;

WordSpec parse_word_spec(std::string_view text);
std::string render(const WordSpec& spec);
LazyWord make_lazy_word(const WordSpec& spec, std::shared_ptr<PairCache> cache = nullptr);
/// At least `min_letters` {a,b} letters of the literal behind a spec, if
/// any; used for cut-position sugar.
std::optional<Word> literal_of(const WordSpec& spec, std::size_t min_letters);

}  // namespace lagrange3
