#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeulerian/perm.hpp"

namespace qeulerian {

// ---------------------------------------------------------------------------
// The elementary hook transformations d and d'
// ---------------------------------------------------------------------------

// d: on hooks with content x_1 < ... < x_m and inv = k, returns the unique
// hook with the same content and inv = m - k, namely
// x_{m-k+1} x_1 ... x_{m-k} x_{m-k+2} ... x_m.
inline Word hook_d(const Word& h) {
    if (!is_hook(h)) throw std::invalid_argument("hook_d: not a hook");
    const int m = static_cast<int>(h.size());
    const int k = inv(h);
    Word sorted = h;
    std::sort(sorted.begin(), sorted.end());
    Word out;
    out.reserve(h.size());
    out.push_back(sorted[static_cast<std::size_t>(m - k)]);  // x_{m-k+1}
    for (int i = 0; i < m; ++i)
        if (i != m - k) out.push_back(sorted[static_cast<std::size_t>(i)]);
    if (!is_hook(out) || inv(out) != m - k)
        throw std::logic_error("hook_d: output violates the inv complement");
    return out;
}

// d': on hooks and nonempty increasing words; first letter becomes x_{m-k},
// so inv goes k -> m - k - 1. Increasing words and hooks trade places at the
// extremes (k = 0 and k = m-1).
inline Word hook_dprime(const Word& w) {
    if (w.empty() || (!is_hook(w) && !is_strictly_increasing(w)))
        throw std::invalid_argument("hook_dprime: not a hook or increasing word");
    const int m = static_cast<int>(w.size());
    const int k = inv(w);
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Word out;
    out.reserve(w.size());
    out.push_back(sorted[static_cast<std::size_t>(m - k - 1)]);  // x_{m-k}
    for (int i = 0; i < m; ++i)
        if (i != m - k - 1) out.push_back(sorted[static_cast<std::size_t>(i)]);
    if (inv(out) != m - k - 1)
        throw std::logic_error("hook_dprime: output violates the inv complement");
    return out;
}

// ---------------------------------------------------------------------------
// The pix-preserving involution (applies d to every hook factor)
// ---------------------------------------------------------------------------

// Fixes pix and inv-lec, sends lec to n - pix - lec.
inline Permutation sympix_involution(const Permutation& p) {
    auto f = hook_factorize(p);
    Word w = f.prefix;
    for (const auto& h : f.hooks) {
        Word dh = hook_d(h);
        w.insert(w.end(), dh.begin(), dh.end());
    }
    Permutation out{w};
    if (hook_factorize(out).pix() != f.pix())
        throw std::logic_error("sympix_involution: image left the pix stratum");
    return out;
}

// ---------------------------------------------------------------------------
// Two-pix-permutations
// ---------------------------------------------------------------------------

// (p1, hooks, p2): increasing word, hook list, increasing word, concatenating
// to a permutation of [n]. An empty hook list is admitted so that the
// complementation involution below is total.
struct TwoPix {
    Word p1;
    std::vector<Word> hooks;
    Word p2;

    int n() const {
        std::size_t s = p1.size() + p2.size();
        for (const auto& h : hooks) s += h.size();
        return static_cast<int>(s);
    }

    Word concat() const {
        Word w = p1;
        for (const auto& h : hooks) w.insert(w.end(), h.begin(), h.end());
        w.insert(w.end(), p2.begin(), p2.end());
        return w;
    }

    int lec() const {
        int s = 0;
        for (const auto& h : hooks) s += inv(h);
        return s;
    }

    int inv_total() const { return inv(concat()); }
    int inv_minus_lec() const { return inv_total() - lec(); }

    std::vector<Word> blocks() const {
        std::vector<Word> b{p1};
        for (const auto& h : hooks) b.push_back(h);
        b.push_back(p2);
        return b;
    }

    void validate() const {
        if (!is_strictly_increasing(p1) || !is_strictly_increasing(p2))
            throw std::invalid_argument("TwoPix: p1/p2 must be increasing");
        for (const auto& h : hooks)
            if (!is_hook(h)) throw std::invalid_argument("TwoPix: invalid hook factor");
        Word all = concat();
        if (all.empty()) throw std::invalid_argument("TwoPix: empty");
        require_distinct(all, "TwoPix");
        Word s = all;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < static_cast<int>(s.size()); ++i)
            if (s[static_cast<std::size_t>(i)] != i + 1)
                throw std::invalid_argument("TwoPix: concatenation is not a permutation of [n]");
    }

    friend bool operator==(const TwoPix&, const TwoPix&) = default;
};

// v <-> (sigma, p2) where sigma = p1 followed by the hooks. The hook
// factorization of that concatenation recuts at exactly the same places,
// which is what makes this a bijection.
inline std::pair<Permutation, Word> twopix_decompose(const TwoPix& v) {
    v.validate();
    Word sigma = v.p1;
    for (const auto& h : v.hooks) sigma.insert(sigma.end(), h.begin(), h.end());
    return {Permutation{sigma}, v.p2};
}

inline TwoPix twopix_compose(const Permutation& sigma, const Word& p2,
                             std::optional<int> expect_p1_len = std::nullopt) {
    auto f = hook_factorize(sigma);
    if (expect_p1_len && f.pix() != *expect_p1_len)
        throw std::invalid_argument("twopix_compose: hook factorization prefix length mismatch");
    TwoPix v{f.prefix, f.hooks, p2};
    v.validate();
    return v;
}

// The lec-complementation involution on two-pix-permutations with |p1| = j:
// lec -> n - j - 1 - lec, inv - lec preserved. A d'(p2) of length >= 2 joins
// the hook list; a length-1 p2 is fixed by d' and stays p2.
inline TwoPix twopix_involution(const TwoPix& v) {
    v.validate();
    if (v.hooks.empty() && v.p2.empty())
        throw std::invalid_argument("twopix_involution: nothing to act on (needs a hook or a p2)");
    TwoPix u;
    u.p1 = v.p1;
    if (!v.p2.empty()) {
        for (const auto& h : v.hooks) u.hooks.push_back(hook_d(h));
        if (v.p2.size() == 1) {
            u.p2 = v.p2;
        } else {
            u.hooks.push_back(hook_dprime(v.p2));
        }
    } else {
        for (std::size_t i = 0; i + 1 < v.hooks.size(); ++i) u.hooks.push_back(hook_d(v.hooks[i]));
        Word last = hook_dprime(v.hooks.back());
        if (is_strictly_increasing(last)) {
            u.p2 = last;
        } else {
            u.hooks.push_back(last);
        }
    }
    u.validate();
    return u;
}

// Text form "p1 | h1 | ... | p2", "-" for an empty p1/p2.
inline std::string to_string(const TwoPix& v) {
    auto field = [](const Word& w) { return w.empty() ? std::string("-") : to_string(w); };
    std::string out = field(v.p1);
    for (const auto& h : v.hooks) out += " | " + to_string(h);
    out += " | " + field(v.p2);
    return out;
}

namespace detail {
inline std::vector<std::string> split_fields(const std::string& text, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream in(text);
    for (std::string tok; std::getline(in, tok, sep);) fields.push_back(tok);
    return fields;
}

inline Word parse_word_field(const std::string& field, const char* who) {
    std::istringstream in(field);
    Word w;
    std::string tok;
    while (in >> tok) {
        if (tok == "-") {
            if (!w.empty()) throw std::invalid_argument(std::string(who) + ": stray '-'");
            return {};
        }
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(who) + ": bad token '" + tok + "'");
        }
        if (used != tok.size() || v <= 0)
            throw std::invalid_argument(std::string(who) + ": bad token '" + tok + "'");
        w.push_back(v);
    }
    return w;
}
}  // namespace detail

inline TwoPix parse_twopix(const std::string& text) {
    auto fields = detail::split_fields(text, '|');
    if (fields.size() < 2) throw std::invalid_argument("TwoPix: expected 'p1 | ... | p2'");
    TwoPix v;
    v.p1 = detail::parse_word_field(fields.front(), "TwoPix");
    v.p2 = detail::parse_word_field(fields.back(), "TwoPix");
    for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
        Word h = detail::parse_word_field(fields[i], "TwoPix");
        if (h.empty()) throw std::invalid_argument("TwoPix: empty hook field");
        v.hooks.push_back(std::move(h));
    }
    v.validate();
    return v;
}

// ---------------------------------------------------------------------------
// The descent-complementing involutions f, f' and g
// ---------------------------------------------------------------------------

namespace detail {
inline Word reflect_f_rec(const Word& w) {
    if (w.size() <= 1) return w;
    const auto jt = std::max_element(w.begin(), w.end());
    const std::size_t j = static_cast<std::size_t>(jt - w.begin());
    if (j == 0) {
        Word rest(w.begin() + 1, w.end());
        Word out = reflect_f_rec(rest);
        out.push_back(w.front());
        return out;
    }
    if (j == w.size() - 1) {
        Word rest(w.begin(), w.end() - 1);
        Word out{w.back()};
        Word f = reflect_f_rec(rest);
        out.insert(out.end(), f.begin(), f.end());
        return out;
    }
    Word left(w.begin(), w.begin() + static_cast<long>(j));
    Word right(w.begin() + static_cast<long>(j) + 1, w.end());
    Word out = reflect_f_rec(left);
    out.push_back(w[j]);
    Word fr = reflect_f_rec(right);
    out.insert(out.end(), fr.begin(), fr.end());
    return out;
}

inline Word reflect_fprime_rec(const Word& w) {
    if (w.size() <= 1) return w;
    const auto jt = std::max_element(w.begin(), w.end());
    const std::size_t j = static_cast<std::size_t>(jt - w.begin());
    if (j == w.size() - 1) return w;  // the only change against f
    if (j == 0) {
        Word rest(w.begin() + 1, w.end());
        Word out = reflect_fprime_rec(rest);
        out.push_back(w.front());
        return out;
    }
    Word left(w.begin(), w.begin() + static_cast<long>(j));
    Word right(w.begin() + static_cast<long>(j) + 1, w.end());
    Word out = reflect_fprime_rec(left);
    out.push_back(w[j]);
    Word fr = reflect_fprime_rec(right);
    out.insert(out.end(), fr.begin(), fr.end());
    return out;
}
}  // namespace detail

// Involution keyed on the position of the maximum: preserves ai, sends des
// to n - 1 - des.
inline Permutation reflect_f(const Permutation& p) {
    return Permutation{detail::reflect_f_rec(p.letters())};
}

// Variant of f whose max-at-the-end branch leaves the word unchanged.
inline Permutation reflect_fprime(const Permutation& p) {
    return Permutation{detail::reflect_fprime_rec(p.letters())};
}

// g on permutations with the maximum at an interior position j (1 < j < n):
// f on the prefix and f on the suffix. Preserves ai, complements des.
inline Permutation reflect_g(const Permutation& p) {
    const Word& w = p.letters();
    const int n = p.size();
    if (n == 0) throw std::invalid_argument("reflect_g: empty");
    const auto jt = std::max_element(w.begin(), w.end());
    const int j = static_cast<int>(jt - w.begin()) + 1;  // 1-based
    if (j <= 1 || j >= n)
        throw std::invalid_argument("reflect_g: maximum must sit strictly inside");
    Word left(w.begin(), w.begin() + j - 1);
    Word right(w.begin() + j, w.end());
    Word out = detail::reflect_f_rec(left);
    out.push_back(w[static_cast<std::size_t>(j) - 1]);
    Word fr = detail::reflect_f_rec(right);
    out.insert(out.end(), fr.begin(), fr.end());
    return Permutation{out};
}

// ---------------------------------------------------------------------------
// The prefix/suffix decomposition behind the restricted recurrence
// ---------------------------------------------------------------------------

// pi = pi1 . max . pi2 with the maximum at an interior position; W is the
// content of pi1.
struct RestrictedDecomp {
    Word W;   // sorted
    Word pi1;
    Word pi2;

    friend bool operator==(const RestrictedDecomp&, const RestrictedDecomp&) = default;
};

inline RestrictedDecomp restricted_decompose(const Permutation& p) {
    const Word& w = p.letters();
    const int n = p.size();
    if (n == 0) throw std::invalid_argument("restricted_decompose: empty");
    const auto jt = std::max_element(w.begin(), w.end());
    const int j = static_cast<int>(jt - w.begin()) + 1;
    if (j <= 1 || j >= n)
        throw std::invalid_argument("restricted_decompose: maximum must sit strictly inside");
    RestrictedDecomp d;
    d.pi1.assign(w.begin(), w.begin() + j - 1);
    d.pi2.assign(w.begin() + j, w.end());
    d.W = d.pi1;
    std::sort(d.W.begin(), d.W.end());
    return d;
}

inline Permutation restricted_compose(const RestrictedDecomp& d) {
    Word w = d.pi1;
    int mx = 0;
    for (int x : d.pi1) mx = std::max(mx, x);
    for (int x : d.pi2) mx = std::max(mx, x);
    w.push_back(mx + 1);
    w.insert(w.end(), d.pi2.begin(), d.pi2.end());
    return Permutation{w};
}

// ---------------------------------------------------------------------------
// j-restricted two-pix-permutations and their complementation involution
// ---------------------------------------------------------------------------

// Pair (pi, p2): p2 increasing over [n] \ X and pi a permutation of X with
// the letter 1 at position j+1; when j = |X| the slot before the final 1 is
// empty and pi is stored as a GapPerm.
struct JResTwoPix {
    PermOrGap pi;
    Word p2;
    int j = 0;

    int x_size() const {
        return std::holds_alternative<Permutation>(pi)
                   ? std::get<Permutation>(pi).size()
                   : std::get<GapPerm>(pi).size();
    }

    int n() const { return x_size() + static_cast<int>(p2.size()); }

    // Letters of pi including the 1 of the gap form.
    Word x_letters() const {
        if (std::holds_alternative<Permutation>(pi)) return std::get<Permutation>(pi).letters();
        return std::get<GapPerm>(pi).gapless_word();
    }

    int lec() const { return lec_pix(pi).first; }

    int inv_total() const {
        int base = std::holds_alternative<Permutation>(pi)
                       ? inv(std::get<Permutation>(pi).letters())
                       : inv_gap(std::get<GapPerm>(pi));
        return base + inv_between({x_letters(), p2});
    }

    int inv_minus_lec() const { return inv_total() - lec(); }

    void validate() const {
        if (!is_strictly_increasing(p2))
            throw std::invalid_argument("JResTwoPix: p2 must be increasing");
        Word x = x_letters();
        Word all = x;
        all.insert(all.end(), p2.begin(), p2.end());
        require_distinct(all, "JResTwoPix");
        Word s = all;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < static_cast<int>(s.size()); ++i)
            if (s[static_cast<std::size_t>(i)] != i + 1)
                throw std::invalid_argument("JResTwoPix: letters must cover [n]");
        if (std::find(x.begin(), x.end(), 1) == x.end())
            throw std::invalid_argument("JResTwoPix: 1 must belong to pi");
        const int m = x_size();
        if (std::holds_alternative<GapPerm>(pi)) {
            if (j != m) throw std::invalid_argument("JResTwoPix: gap form requires j = |X|");
        } else {
            if (j < 1 || j >= m)
                throw std::invalid_argument("JResTwoPix: need 1 <= j < |X| for the plain form");
            const Word& w = std::get<Permutation>(pi).letters();
            if (w[static_cast<std::size_t>(j)] != 1)
                throw std::invalid_argument("JResTwoPix: letter 1 must sit at position j+1");
        }
    }

    friend bool operator==(const JResTwoPix&, const JResTwoPix&) = default;
};

// Involution on j-restricted two-pix-permutations (j >= 2):
// lec -> n - 2 - lec, inv - lec preserved. The factor list tau_0 tau_1 ...
// tau_r has tau_0 = the increasing prefix if nonempty, else the first hook;
// tau_0 is transformed by d', interior hooks by d, and the last factor is
// handled by the case table on where the letter 1 sits.
inline JResTwoPix jres_involution(const JResTwoPix& v) {
    v.validate();
    if (v.j < 2)
        throw std::invalid_argument("jres_involution: j = 1 is excluded");

    const bool gap = std::holds_alternative<GapPerm>(v.pi);
    HookFactorization f = hook_factorize(v.pi);

    // Factor list with tau_0 merged.
    std::vector<Word> factors;
    if (!f.prefix.empty()) factors.push_back(f.prefix);
    for (const auto& h : f.hooks) factors.push_back(h);
    const std::size_t real = factors.size();  // factors other than a gap hook
    const std::size_t total = real + (gap ? 1 : 0);
    if (total < 2) throw std::logic_error("jres_involution: degenerate factorization");

    const Word& tau0 = factors.front();
    if (std::find(tau0.begin(), tau0.end(), 1) != tau0.end())
        throw std::logic_error("jres_involution: 1 inside tau_0 despite j >= 2");

    // d'(tau_0) then d on every interior factor. For the gap form every real
    // factor beyond tau_0 is interior; otherwise the last real factor is the
    // cased tau_r.
    const std::size_t interior_end = gap ? real : real - 1;
    Word head = hook_dprime(tau0);
    for (std::size_t i = 1; i < interior_end; ++i) {
        Word dh = hook_d(factors[i]);
        head.insert(head.end(), dh.begin(), dh.end());
    }

    auto with_suffix = [&](const Word& suffix) {
        Word w = head;
        w.insert(w.end(), suffix.begin(), suffix.end());
        return w;
    };

    JResTwoPix u;
    u.j = v.j;
    if (gap) {
        // (i) tau_r is the gap factor.
        if (!v.p2.empty()) {
            Word hook{v.p2.back(), 1};
            hook.insert(hook.end(), v.p2.begin(), v.p2.end() - 1);
            u.pi = Permutation{with_suffix(hook)};
        } else {
            u.pi = GapPerm{head};
        }
    } else {
        const Word& tau_r = factors.back();
        const bool has_one = std::find(tau_r.begin(), tau_r.end(), 1) != tau_r.end();
        if (has_one) {
            // (ii) tau_r = y_s 1 y_1 ... y_{s-1}.
            if (tau_r[1] != 1) throw std::logic_error("jres_involution: 1 not second in its hook");
            const int ys = tau_r.front();
            Word tail(tau_r.begin() + 2, tau_r.end());
            if (!v.p2.empty()) {
                if (v.p2.size() == 1) {
                    u.pi = Permutation{with_suffix(hook_d(tau_r))};
                    u.p2 = v.p2;
                } else {
                    Word suffix = hook_d(tau_r);
                    Word dp = hook_dprime(v.p2);
                    suffix.insert(suffix.end(), dp.begin(), dp.end());
                    u.pi = Permutation{with_suffix(suffix)};
                }
            } else if (tail.empty() || ys > tail.back()) {
                tail.push_back(ys);
                if (!is_strictly_increasing(tail))
                    throw std::logic_error("jres_involution: y_1...y_s not increasing");
                u.pi = GapPerm{head};
                u.p2 = tail;
            } else {
                u.pi = Permutation{with_suffix(hook_dprime(tau_r))};
            }
        } else {
            // (iii) 1 lives in an interior factor.
            if (!v.p2.empty()) {
                if (v.p2.size() == 1) {
                    u.pi = Permutation{with_suffix(hook_d(tau_r))};
                    u.p2 = v.p2;
                } else {
                    Word suffix = hook_d(tau_r);
                    Word dp = hook_dprime(v.p2);
                    suffix.insert(suffix.end(), dp.begin(), dp.end());
                    u.pi = Permutation{with_suffix(suffix)};
                }
            } else if (inv(tau_r) == static_cast<int>(tau_r.size()) - 1) {
                u.pi = Permutation{head};
                u.p2 = hook_dprime(tau_r);
            } else {
                u.pi = Permutation{with_suffix(hook_dprime(tau_r))};
            }
        }
    }
    u.validate();
    return u;
}

// Text form "j=<int> | <pi> | <p2>" with "-" for an empty p2.
inline std::string to_string(const JResTwoPix& v) {
    std::string out = "j=" + std::to_string(v.j) + " | " + to_string(v.pi) + " | ";
    out += v.p2.empty() ? "-" : to_string(v.p2);
    return out;
}

inline JResTwoPix parse_jres(const std::string& text) {
    auto fields = detail::split_fields(text, '|');
    if (fields.size() != 3) throw std::invalid_argument("JResTwoPix: expected 'j=J | pi | p2'");
    std::istringstream jin(fields[0]);
    std::string jtok;
    jin >> jtok;
    std::string extra;
    if (jin >> extra || jtok.size() < 3 || jtok.compare(0, 2, "j=") != 0)
        throw std::invalid_argument("JResTwoPix: bad j field");
    JResTwoPix v;
    try {
        v.j = std::stoi(jtok.substr(2));
    } catch (const std::exception&) {
        throw std::invalid_argument("JResTwoPix: bad j field");
    }
    v.pi = parse_perm_or_gap(fields[1]);
    v.p2 = detail::parse_word_field(fields[2], "JResTwoPix");
    v.validate();
    return v;
}

}  // namespace qeulerian
