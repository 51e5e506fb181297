#include "lagrange3/words.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lagrange3 {

Word parse_word(std::string_view text)
{
    Word w;
    bool seen_digit = false;
    bool seen_letter = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool digit = c == '1' || c == '2';
        bool letter = c == 'a' || c == 'b';
        if (!digit && !letter) {
            throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        if ((digit && seen_letter) || (letter && seen_digit)) {
            throw ParseError(i, "digits and letters mixed in one word");
        }
        seen_digit = seen_digit || digit;
        seen_letter = seen_letter || letter;
    }
    w.alphabet = seen_digit ? Alphabet::OneTwo : Alphabet::AB;
    w.letters = std::string(text);
    return w;
}

std::string chi(std::string_view ab)
{
    std::string out;
    out.reserve(2 * ab.size());
    for (char c : ab) {
        out += c == 'a' ? "22" : "11";
    }
    return out;
}

Word chi_expand(const Word& w)
{
    if (w.alphabet == Alphabet::OneTwo) {
        return w;
    }
    return {Alphabet::OneTwo, chi(w.letters)};
}

Word chi_factor(const Word& w)
{
    if (w.alphabet == Alphabet::AB) {
        return w;
    }
    Word out{Alphabet::AB, {}};
    const std::string& s = w.letters;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) {
            ++j;
        }
        if ((j - i) % 2 != 0) {
            throw OddRun(i, j - i);
        }
        out.letters.append((j - i) / 2, s[i] == '2' ? 'a' : 'b');
        i = j;
    }
    return out;
}

std::string apply_subst(Subst op, std::string_view w)
{
    if (op == Subst::U || op == Subst::V) {
        std::string out;
        for (char c : w) {
            if (op == Subst::U) {
                out += c == 'a' ? "ab" : "b";
            } else {
                out += c == 'a' ? "a" : "ab";
            }
        }
        return out;
    }
    // Signed letters: 'a','b' positive, 'A','B' inverse. Stack reduction.
    std::string stack;
    auto push = [&](char c) {
        char inv = static_cast<char>(c == 'a' ? 'A' : c == 'b' ? 'B' : c == 'A' ? 'a' : 'b');
        if (!stack.empty() && stack.back() == inv) {
            stack.pop_back();
        } else {
            stack.push_back(c);
        }
    };
    for (char c : w) {
        if (op == Subst::u) {
            // a -> a b^-1, b -> b
            if (c == 'a') {
                push('a');
                push('B');
            } else {
                push('b');
            }
        } else {
            // a -> a, b -> a^-1 b
            if (c == 'a') {
                push('a');
            } else {
                push('A');
                push('b');
            }
        }
    }
    if (stack.find_first_of("AB") != std::string::npos) {
        throw Error(ErrorKind::NotPositive, std::string(op == Subst::u ? "u" : "v") + "(" + std::string(w) +
                                                ") is not a positive word");
    }
    return stack;
}

std::vector<Op> parse_ops(std::string_view text)
{
    std::vector<Op> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'U') {
            out.push_back(Op::U);
        } else if (text[i] == 'V') {
            out.push_back(Op::V);
        } else {
            throw ParseError(i, std::string("operator must be U or V, got '") + text[i] + "'");
        }
    }
    return out;
}

std::string render_ops(const std::vector<Op>& ops)
{
    std::string out;
    for (Op op : ops) {
        out += op == Op::U ? 'U' : 'V';
    }
    return out;
}

WordPair bar_root()
{
    return {"a", "b", {Family::Bar, {}}};
}

WordPair tilde_root()
{
    return {"a", "ab", {Family::Tilde, {}}};
}

WordPair pair_step(const WordPair& pair, Op op)
{
    WordPair out;
    out.path = pair.path;
    out.path.ops.push_back(op);
    if (pair.path.family == Family::Bar) {
        if (op == Op::U) {
            out.alpha = pair.alpha + pair.beta;
            out.beta = pair.beta;
        } else {
            out.alpha = pair.alpha;
            out.beta = pair.alpha + pair.beta;
        }
        return out;
    }
    std::string ab = pair.alpha + pair.beta;
    std::string bb = pair.beta + pair.beta;
    if (op == Op::U) {
        out.alpha = ab + pair.beta;
        out.beta = ab + bb;
    } else {
        out.alpha = ab + bb;
        out.beta = ab + bb + pair.beta;
    }
    return out;
}

WordPair bar_pair(const std::vector<Op>& ops)
{
    WordPair p = bar_root();
    for (Op op : ops) {
        p = pair_step(p, op);
    }
    return p;
}

WordPair tilde_pair(const std::vector<Op>& ops)
{
    WordPair p = tilde_root();
    for (Op op : ops) {
        p = pair_step(p, op);
    }
    return p;
}

OperatorWord expand_tilde_ops(const std::vector<Op>& ops)
{
    OperatorWord out{Family::Bar, {}};
    for (Op op : ops) {
        out.ops.push_back(Op::U);
        out.ops.push_back(Op::U);
        if (op == Op::V) {
            out.ops.push_back(Op::U);
        }
        out.ops.push_back(Op::V);
    }
    return out;
}

WordPair interior_of_exterior(const std::vector<Op>& ops)
{
    WordPair exterior = bar_pair(ops);
    std::string alpha = "a";
    std::string beta = "b";
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        Subst s = *it == Op::U ? Subst::U : Subst::V;
        alpha = apply_subst(s, alpha);
        beta = apply_subst(s, beta);
    }
    if (alpha != exterior.alpha || beta != exterior.beta) {
        throw Error(ErrorKind::MismatchBug, "interior (" + alpha + "," + beta + ") != exterior (" + exterior.alpha +
                                                "," + exterior.beta + ") for " + render_ops(ops));
    }
    return exterior;
}

std::vector<CohnVertex> cohn_tree(std::size_t depth)
{
    std::vector<CohnVertex> out{{"ab", {}}};
    std::size_t level_start = 0;
    for (std::size_t level = 1; level <= depth; ++level) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (Op op : {Op::U, Op::V}) {
                CohnVertex child;
                child.word = apply_subst(op == Op::U ? Subst::U : Subst::V, out[i].word);
                child.path = out[i].path;
                child.path.push_back(op);
                out.push_back(std::move(child));
            }
        }
        level_start = level_end;
    }
    return out;
}

std::string word_mod(std::string_view w, WordMod mod)
{
    std::string s(w);
    switch (mod) {
    case WordMod::Plus:
        if (s.empty()) {
            throw Error(ErrorKind::BadShape, "plus of the empty word");
        }
        return s.substr(1);
    case WordMod::Minus:
        if (s.empty()) {
            throw Error(ErrorKind::BadShape, "minus of the empty word");
        }
        s.pop_back();
        return s;
    case WordMod::SupB:
        if (s.empty() || s.front() != 'a') {
            throw Error(ErrorKind::BadShape, "sup_b needs a word starting with a: '" + s + "'");
        }
        s.front() = 'b';
        return s;
    case WordMod::SubA:
        if (s.empty() || s.back() != 'b') {
            throw Error(ErrorKind::BadShape, "sub_a needs a word ending with b: '" + s + "'");
        }
        s.back() = 'a';
        return s;
    case WordMod::Transpose:
        return transpose(s);
    }
    return s;
}

WordMod parse_word_mod(std::string_view name)
{
    if (name == "plus") {
        return WordMod::Plus;
    }
    if (name == "minus") {
        return WordMod::Minus;
    }
    if (name == "sup_b") {
        return WordMod::SupB;
    }
    if (name == "sub_a") {
        return WordMod::SubA;
    }
    if (name == "transpose") {
        return WordMod::Transpose;
    }
    throw Error(ErrorKind::BadArgument, "unknown word modification '" + std::string(name) + "'");
}

std::string transpose(std::string_view w)
{
    return std::string(w.rbegin(), w.rend());
}

bool is_palindrome(std::string_view w)
{
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

std::vector<Letter> decode(std::string_view w, const WordPair& pair)
{
    const std::string& a = pair.alpha;
    const std::string& b = pair.beta;
    if (a.empty() || b.empty()) {
        throw Error(ErrorKind::BadArgument, "decode needs nonempty pair words");
    }
    // Depth-first, alpha first; positions known to fail are remembered.
    std::vector<char> dead(w.size() + 1, 0);
    std::vector<Letter> parse;
    std::vector<Letter> best;
    std::size_t best_pos = 0;
    std::vector<std::pair<std::size_t, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto& [pos, next] = stack.back();
        if (pos == w.size()) {
            return parse;
        }
        if (pos > best_pos || (pos == best_pos && parse.size() > best.size())) {
            best_pos = pos;
            best = parse;
        }
        bool advanced = false;
        while (!advanced && next < 2) {
            const std::string& piece = next == 0 ? a : b;
            Letter letter = next == 0 ? Letter::Alpha : Letter::Beta;
            ++next;
            std::size_t end = pos + piece.size();
            if (end <= w.size() && dead[end] == 0 && w.compare(pos, piece.size(), piece) == 0) {
                parse.push_back(letter);
                stack.emplace_back(end, 0);
                advanced = true;
            }
        }
        if (!advanced) {
            dead[pos] = 1;
            stack.pop_back();
            if (!parse.empty()) {
                parse.pop_back();
            }
        }
    }
    throw NotDecodable(best, best_pos);
}

Continuation parse_continuation(std::string_view name)
{
    if (name == "alt") {
        return Continuation::Alternate;
    }
    if (name == "rep") {
        return Continuation::Repeat;
    }
    if (name == "U") {
        return Continuation::ConstU;
    }
    if (name == "V") {
        return Continuation::ConstV;
    }
    if (name == "tm") {
        return Continuation::ThueMorse;
    }
    throw Error(ErrorKind::BadSpec, "unknown continuation '" + std::string(name) + "' (alt, rep, U, V, tm)");
}

const char* to_string(Continuation cont)
{
    switch (cont) {
    case Continuation::Alternate:
        return "alt";
    case Continuation::Repeat:
        return "rep";
    case Continuation::ConstU:
        return "U";
    case Continuation::ConstV:
        return "V";
    case Continuation::ThueMorse:
        return "tm";
    }
    return "?";
}

std::size_t PairCache::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        return 0;
    }
    std::map<std::string, std::pair<std::string, std::string>> raw;
    std::size_t rejected = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string key;
        std::string alpha;
        std::string beta;
        if (!std::getline(fields, key, '\t') || !std::getline(fields, alpha, '\t') || !std::getline(fields, beta)) {
            ++rejected;
            continue;
        }
        if (key == "-") {
            key.clear();
        }
        if (key.find_first_not_of("UV") != std::string::npos ||
            alpha.find_first_not_of("ab") != std::string::npos || beta.find_first_not_of("ab") != std::string::npos) {
            ++rejected;
            continue;
        }
        raw[key] = {alpha, beta};
    }
    // Shorter keys first, so parents are validated before children.
    std::vector<std::string> keys;
    for (const auto& entry : raw) {
        keys.push_back(entry.first);
    }
    std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& key : keys) {
        const auto& entry = raw[key];
        WordPair expected;
        if (key.empty()) {
            expected = tilde_root();
        } else {
            std::string parent_key = key.substr(0, key.size() - 1);
            auto parent = entries_.find(parent_key);
            WordPair parent_pair =
                parent != entries_.end() ? WordPair{parent->second.first, parent->second.second, {Family::Tilde, {}}}
                                         : tilde_pair(parse_ops(parent_key));
            expected = pair_step(parent_pair, key.back() == 'U' ? Op::U : Op::V);
        }
        if (expected.alpha == entry.first && expected.beta == entry.second) {
            entries_[key] = entry;
        } else {
            ++rejected;
        }
    }
    return rejected;
}

void PairCache::save(const std::string& path) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream out(path);
    for (const auto& [key, entry] : entries_) {
        out << (key.empty() ? "-" : key) << '\t' << entry.first << '\t' << entry.second << '\n';
    }
}

bool PairCache::find(const std::string& key, WordPair& out) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return false;
    }
    out.alpha = it->second.first;
    out.beta = it->second.second;
    out.path = {Family::Tilde, parse_ops(key)};
    return true;
}

void PairCache::put(const std::string& key, const WordPair& pair)
{
    std::lock_guard<std::mutex> lock(mutex_);
    entries_[key] = {pair.alpha, pair.beta};
}

std::size_t PairCache::size() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

OperatorStream::OperatorStream(std::vector<Op> seed, Continuation cont, std::shared_ptr<PairCache> cache)
    : seed_(std::move(seed)), cont_(cont), cache_(std::move(cache))
{
    if (cont_ == Continuation::Repeat && seed_.empty()) {
        throw Error(ErrorKind::BadSpec, "repeat continuation needs a nonempty seed");
    }
}

Op OperatorStream::at(std::size_t k) const
{
    if (k < seed_.size()) {
        return seed_[k];
    }
    std::size_t j = k - seed_.size();
    switch (cont_) {
    case Continuation::Alternate:
        return j % 2 == 0 ? Op::U : Op::V;
    case Continuation::Repeat:
        return seed_[j % seed_.size()];
    case Continuation::ConstU:
        return Op::U;
    case Continuation::ConstV:
        return Op::V;
    case Continuation::ThueMorse:
        return __builtin_popcountll(static_cast<unsigned long long>(j)) % 2 == 0 ? Op::U : Op::V;
    }
    return Op::U;
}

std::vector<Op> OperatorStream::prefix(std::size_t n) const
{
    std::vector<Op> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(at(k));
    }
    return out;
}

Op OperatorStream::bar_at(std::size_t k) const
{
    if (k == 0) {
        return Op::V;
    }
    // Blocks UUV and UUUV.
    std::size_t pos = 1;
    for (std::size_t t = 0;; ++t) {
        std::size_t len = at(t) == Op::U ? 3 : 4;
        if (k < pos + len) {
            return k == pos + len - 1 ? Op::V : Op::U;
        }
        pos += len;
    }
}

bool OperatorStream::eventually_constant() const
{
    switch (cont_) {
    case Continuation::ConstU:
    case Continuation::ConstV:
        return true;
    case Continuation::Repeat:
        return std::all_of(seed_.begin(), seed_.end(), [&](Op op) { return op == seed_.front(); });
    default:
        return false;
    }
}

const WordPair& OperatorStream::pair(std::size_t n) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    if (pairs_.empty()) {
        pairs_.push_back(tilde_root());
    }
    while (pairs_.size() <= n) {
        std::size_t k = pairs_.size();
        std::string key = render_ops(prefix(k));
        WordPair next;
        if (!cache_ || !cache_->find(key, next)) {
            next = pair_step(pairs_.back(), at(k - 1));
            if (cache_) {
                cache_->put(key, next);
            }
        }
        next.path = {Family::Tilde, prefix(k)};
        pairs_.push_back(std::move(next));
    }
    return pairs_[n];
}

}  // namespace lagrange3
