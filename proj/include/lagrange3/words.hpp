#pragma once

#include "lagrange3/errors.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lagrange3 {

enum class Alphabet { OneTwo, AB };

/// Finite word over {1,2} or {a,b}. Lengths are always in {1,2} letters.
struct Word {
    Alphabet alphabet = Alphabet::AB;
    std::string letters;

    std::size_t length() const { return alphabet == Alphabet::AB ? 2 * letters.size() : letters.size(); }
    bool operator==(const Word&) const = default;
};

/// Accepts "abba" or "2211"; mixing the two alphabets is a ParseError.
Word parse_word(std::string_view text);

/// a -> 22, b -> 11
Word chi_expand(const Word& w);
std::string chi(std::string_view ab);
/// Inverse of chi_expand; throws OddRun.
Word chi_factor(const Word& w);

enum class Subst { U, V, u, v };
/// Letterwise substitution on an {a,b} string. u and v reduce in the free
/// group and throw NotPositive when a negative letter survives.
std::string apply_subst(Subst op, std::string_view w);

enum class Op { U, V };
enum class Family { Bar, Tilde };

struct OperatorWord {
    Family family = Family::Bar;
    std::vector<Op> ops;

    bool operator==(const OperatorWord&) const = default;
};

std::vector<Op> parse_ops(std::string_view text);
std::string render_ops(const std::vector<Op>& ops);

struct WordPair {
    std::string alpha;
    std::string beta;
    OperatorWord path;

    /// Pairs compare by their words only.
    bool operator==(const WordPair& other) const { return alpha == other.alpha && beta == other.beta; }
};

WordPair bar_root();
WordPair tilde_root();
WordPair pair_step(const WordPair& pair, Op op);
WordPair bar_pair(const std::vector<Op>& ops);
WordPair tilde_pair(const std::vector<Op>& ops);
/// Each tilde U becomes U,U,V and each tilde V becomes U,U,U,V (bar family).
OperatorWord expand_tilde_ops(const std::vector<Op>& ops);
/// Exterior fold of `ops` from (a,b), cross-checked against the nested
/// interior substitutions; throws MismatchBug on disagreement.
WordPair interior_of_exterior(const std::vector<Op>& ops);

struct CohnVertex {
    std::string word;
    std::vector<Op> path;
};
/// Root ab, child = U or V applied to the parent word. Level order, U first.
std::vector<CohnVertex> cohn_tree(std::size_t depth);

enum class WordMod { Plus, Minus, SupB, SubA, Transpose };
/// plus drops the first letter, minus the last; sup_b turns a leading a into
/// b; sub_a turns a trailing b into a. Throws BadShape.
std::string word_mod(std::string_view w, WordMod mod);
WordMod parse_word_mod(std::string_view name);
bool is_palindrome(std::string_view w);
std::string transpose(std::string_view w);

enum class Letter { Alpha, Beta };

class NotDecodable : public Error {
public:
    NotDecodable(std::vector<Letter> decoded, std::size_t consumed)
        : Error(ErrorKind::NotDecodable, "not decodable; longest parse covers " + std::to_string(consumed) + " letters"),
          decoded_(std::move(decoded)),
          consumed_(consumed)
    {
    }
    const std::vector<Letter>& decoded() const { return decoded_; }
    std::size_t consumed() const { return consumed_; }

private:
    std::vector<Letter> decoded_;
    std::size_t consumed_;
};

std::vector<Letter> decode(std::string_view w, const WordPair& pair);

enum class Continuation { Alternate, Repeat, ConstU, ConstV, ThueMorse };
Continuation parse_continuation(std::string_view name);
const char* to_string(Continuation cont);

/// Tilde pairs keyed by operator path, persisted as "path<TAB>alpha<TAB>beta".
class PairCache {
public:
    /// Loads entries, keeping only those consistent with their parent or with
    /// a direct recomputation. Returns the number of rejected lines.
    std::size_t load(const std::string& path);
    void save(const std::string& path) const;

    bool find(const std::string& key, WordPair& out) const;
    void put(const std::string& key, const WordPair& pair);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::pair<std::string, std::string>> entries_;
};

/// Infinite tilde operator sequence: a finite seed followed by a fixed
/// continuation rule. Pairs are computed on demand and cached.
class OperatorStream {
public:
    explicit OperatorStream(std::vector<Op> seed = {}, Continuation cont = Continuation::Alternate,
                            std::shared_ptr<PairCache> cache = nullptr);

    const std::vector<Op>& seed() const { return seed_; }
    Continuation continuation() const { return cont_; }
    Op at(std::size_t k) const;
    std::vector<Op> prefix(std::size_t n) const;
    /// Tilde op k of the exterior sequence V, then the expansion of each op.
    Op bar_at(std::size_t k) const;
    /// True when one operator eventually repeats forever.
    bool eventually_constant() const;

    /// Tilde pair after the first n ops. The reference stays valid.
    const WordPair& pair(std::size_t n) const;

private:
    std::vector<Op> seed_;
    Continuation cont_;
    std::shared_ptr<PairCache> cache_;
    mutable std::mutex mutex_;
    mutable std::deque<WordPair> pairs_;
};

}  // namespace lagrange3
