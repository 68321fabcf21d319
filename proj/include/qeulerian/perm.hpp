#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qeulerian {

// A word is a sequence of positive letters; repeats allowed.
using Word = std::vector<int>;

inline bool is_strictly_increasing(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] >= w[i]) return false;
    return true;
}

// Hook: w1 > w2 and w2 < w3 < ... < wm, length >= 2.
inline bool is_hook(const Word& w) {
    if (w.size() < 2 || w[0] <= w[1]) return false;
    for (std::size_t i = 2; i < w.size(); ++i)
        if (w[i - 1] >= w[i]) return false;
    return true;
}

inline void require_distinct(const Word& w, const char* who) {
    std::set<int> seen;
    for (int x : w) {
        if (x <= 0) throw std::invalid_argument(std::string(who) + ": letters must be positive");
        if (!seen.insert(x).second)
            throw std::invalid_argument(std::string(who) + ": repeated letter " + std::to_string(x));
    }
}

// Distinct-letter word over an arbitrary ground set (the set of its letters).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(Word letters) : letters_(std::move(letters)) {
        require_distinct(letters_, "Permutation");
    }

    const Word& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    // Ground set is exactly [n].
    bool ground_is_range() const {
        Word s = letters_;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < static_cast<int>(s.size()); ++i)
            if (s[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Word letters_;
};

// One-line word with a designated empty slot before a final letter 1:
// "head □ 1". The head holds the letters other than 1.
class GapPerm {
public:
    GapPerm() = default;
    explicit GapPerm(Word head) : head_(std::move(head)) {
        require_distinct(head_, "GapPerm");
        for (int x : head_)
            if (x == 1) throw std::invalid_argument("GapPerm: head must not contain 1");
    }

    const Word& head() const { return head_; }
    int size() const { return static_cast<int>(head_.size()) + 1; }  // letters incl. 1

    // The word with the gap deleted: head followed by 1.
    Word gapless_word() const {
        Word w = head_;
        w.push_back(1);
        return w;
    }

    friend bool operator==(const GapPerm&, const GapPerm&) = default;

private:
    Word head_;
};

using PermOrGap = std::variant<Permutation, GapPerm>;

// ---------------------------------------------------------------------------
// Elementary statistics
// ---------------------------------------------------------------------------

inline int des(const Word& w) {
    int d = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) ++d;
    return d;
}

inline int maj(const Word& w) {
    int m = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) m += static_cast<int>(i);
    return m;
}

inline int inv(const Word& w) {
    int v = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++v;
    return v;
}

// Admissible inversions: pairs (w_i, w_j), i < j, w_i > w_j, such that either
// a rise enters position i, or some intermediate letter exceeds w_i.
inline int ai(const Word& w) {
    require_distinct(w, "ai");
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bool rise_in = i > 0 && w[i - 1] < w[i];
        bool bigger_between = false;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j] && (rise_in || bigger_between)) ++count;
            if (w[j] > w[i]) bigger_between = true;
        }
    }
    return count;
}

inline int aid(const Word& w) { return ai(w) + des(w); }

// rix: recursion keyed on the rightmost maximum. rix(empty) = 0.
inline int rix(const Word& w) {
    std::size_t lo = 0, hi = w.size();
    int acc = 0;
    while (lo < hi) {
        std::size_t imax = lo;
        for (std::size_t i = lo; i < hi; ++i)
            if (w[i] >= w[imax]) imax = i;
        if (imax + 1 == hi) {  // rightmost max at the end (covers length 1)
            ++acc;
            --hi;
        } else if (imax == lo) {
            return acc;        // at the front of a longer word
        } else {
            lo = imax + 1;
        }
    }
    return acc;
}

// inv across an ordered sequence of disjoint blocks: pairs k in block_i,
// l in block_j with k > l and i < j.
inline int inv_between(const std::vector<Word>& blocks) {
    std::set<int> seen;
    for (const auto& b : blocks)
        for (int x : b)
            if (!seen.insert(x).second)
                throw std::invalid_argument("inv_between: blocks overlap at " + std::to_string(x));
    int v = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (int k : blocks[i])
                for (int l : blocks[j])
                    if (k > l) ++v;
    return v;
}

// ---------------------------------------------------------------------------
// Hook factorization
// ---------------------------------------------------------------------------

// Unique split into an increasing prefix followed by hooks, obtained by
// right-to-left extraction; a GapPerm carries the extra trailing "□1" factor.
struct HookFactorization {
    Word prefix;              // increasing, possibly empty
    std::vector<Word> hooks;  // genuine hooks, left to right
    bool gap_hook = false;    // trailing "□1"

    int pix() const { return static_cast<int>(prefix.size()); }

    int lec() const {
        int s = 0;
        for (const auto& h : hooks) s += inv(h);
        return s;  // the gap factor contributes 0
    }

    // Reassembled input (for the gap form, the word with the gap deleted).
    Word concat() const {
        Word w = prefix;
        for (const auto& h : hooks) w.insert(w.end(), h.begin(), h.end());
        if (gap_hook) w.push_back(1);
        return w;
    }

    // Block contents in factor order, the gap factor contributing {1}.
    std::vector<Word> blocks() const {
        std::vector<Word> b;
        b.push_back(prefix);
        for (const auto& h : hooks) b.push_back(h);
        if (gap_hook) b.push_back(Word{1});
        return b;
    }
};

namespace detail {
inline HookFactorization factorize_word(const Word& w) {
    require_distinct(w, "hook_factorize");
    HookFactorization f;
    std::size_t e = w.size();
    while (e > 0) {
        // Maximal increasing run ending at position e-1.
        std::size_t s = e - 1;
        while (s > 0 && w[s - 1] < w[s]) --s;
        if (s == 0) {
            f.prefix.assign(w.begin(), w.begin() + static_cast<long>(e));
            break;
        }
        // w[s-1] > w[s]: the hook is w[s-1..e).
        f.hooks.emplace_back(w.begin() + static_cast<long>(s) - 1, w.begin() + static_cast<long>(e));
        e = s - 1;
    }
    std::reverse(f.hooks.begin(), f.hooks.end());
    return f;
}
}  // namespace detail

inline HookFactorization hook_factorize(const Permutation& p) {
    return detail::factorize_word(p.letters());
}

inline HookFactorization hook_factorize(const GapPerm& g) {
    HookFactorization f = detail::factorize_word(g.head());
    f.gap_hook = true;
    return f;
}

inline HookFactorization hook_factorize(const PermOrGap& w) {
    return std::visit([](const auto& x) { return hook_factorize(x); }, w);
}

inline std::pair<int, int> lec_pix(const Permutation& p) {
    auto f = hook_factorize(p);
    return {f.lec(), f.pix()};
}

inline std::pair<int, int> lec_pix(const GapPerm& g) {
    auto f = hook_factorize(g);
    return {f.lec(), f.pix()};
}

inline std::pair<int, int> lec_pix(const PermOrGap& w) {
    return std::visit([](const auto& x) { return lec_pix(x); }, w);
}

inline int lec(const Word& w) { return detail::factorize_word(w).lec(); }
inline int pix(const Word& w) { return detail::factorize_word(w).pix(); }

// inv of a gap permutation: inversions of the word with the gap deleted.
inline int inv_gap(const GapPerm& g) { return inv(g.gapless_word()); }

// ---------------------------------------------------------------------------
// Full statistic record on S_n
// ---------------------------------------------------------------------------

struct StatRecord {
    int des = 0, maj = 0, exc = 0, fix = 0, inv = 0, imaj = 0;
    int lec = 0, pix = 0, ai = 0, aid = 0, rix = 0;
};

// exc / fix / imaj need the ground set [n]; rejects anything else.
inline StatRecord stats(const Permutation& p) {
    if (!p.ground_is_range())
        throw std::invalid_argument("stats: exc/fix/imaj require ground set [n]");
    const Word& w = p.letters();
    const int n = p.size();
    StatRecord s;
    s.des = des(w);
    s.maj = maj(w);
    s.inv = inv(w);
    s.ai = ai(w);
    s.aid = s.ai + s.des;
    s.rix = rix(w);
    Word invperm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (w[static_cast<std::size_t>(i)] > i + 1) ++s.exc;
        if (w[static_cast<std::size_t>(i)] == i + 1) ++s.fix;
        invperm[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] = i + 1;
    }
    s.imaj = maj(invperm);
    auto lp = lec_pix(p);
    s.lec = lp.first;
    s.pix = lp.second;
    return s;
}

// ---------------------------------------------------------------------------
// Text format: "4 2 1 5 3"; gap form "3 2 _ 1"
// ---------------------------------------------------------------------------

inline std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

inline std::string to_string(const Permutation& p) { return to_string(p.letters()); }

inline std::string to_string(const GapPerm& g) {
    std::string out = to_string(g.head());
    if (!out.empty()) out += ' ';
    out += "_ 1";
    return out;
}

inline std::string to_string(const PermOrGap& w) {
    return std::visit([](const auto& x) { return to_string(x); }, w);
}

inline PermOrGap parse_perm_or_gap(const std::string& text) {
    std::istringstream in(text);
    Word letters;
    std::vector<bool> is_gap;
    std::string tok;
    while (in >> tok) {
        if (tok == "_") {
            letters.push_back(0);
            is_gap.push_back(true);
            continue;
        }
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse: bad token '" + tok + "'");
        }
        if (used != tok.size() || v <= 0)
            throw std::invalid_argument("parse: bad token '" + tok + "'");
        letters.push_back(v);
        is_gap.push_back(false);
    }
    const std::size_t gaps = static_cast<std::size_t>(std::count(is_gap.begin(), is_gap.end(), true));
    if (gaps == 0) return Permutation{letters};
    if (gaps > 1) throw std::invalid_argument("parse: more than one gap");
    if (letters.size() < 2 || !is_gap[letters.size() - 2] || letters.back() != 1)
        throw std::invalid_argument("parse: gap must sit immediately before a final 1");
    letters.pop_back();  // the 1
    letters.pop_back();  // the gap
    return GapPerm{letters};
}

inline Permutation parse_permutation(const std::string& text) {
    auto w = parse_perm_or_gap(text);
    if (!std::holds_alternative<Permutation>(w))
        throw std::invalid_argument("parse: gap form not allowed here");
    return std::get<Permutation>(w);
}

}  // namespace qeulerian
