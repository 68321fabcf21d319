#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeulerian/perm.hpp"
#include "qeulerian/transforms.hpp"
#include "qeulerian/trqpoly.hpp"

namespace qeulerian {

// Enumeration bound for the brute-force constructors; EULAB_MAX_N overrides.
inline int enumeration_bound() {
    if (const char* env = std::getenv("EULAB_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 14) return static_cast<int>(v);
        throw std::invalid_argument("EULAB_MAX_N: expected an integer in [0, 14]");
    }
    return 9;
}

inline void check_bound(int n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": negative n");
    if (n > enumeration_bound())
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                    " exceeds the enumeration bound " +
                                    std::to_string(enumeration_bound()));
}

// Visits the permutations of `letters` in lexicographic order.
inline void for_each_arrangement(Word letters, const std::function<void(const Word&)>& fn) {
    std::sort(letters.begin(), letters.end());
    if (letters.empty()) {
        fn(letters);
        return;
    }
    do {
        fn(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
}

inline void for_each_permutation(int n, const std::function<void(const Word&)>& fn) {
    Word w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    for_each_arrangement(std::move(w), fn);
}

// Visits the subsets of `ground`, each sorted ascending.
inline void for_each_subset(const Word& ground, const std::function<void(const Word&)>& fn) {
    const std::size_t n = ground.size();
    if (n > 20) throw std::invalid_argument("for_each_subset: ground set too large");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Word sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) sub.push_back(ground[i]);
        fn(sub);
    }
}

// ---------------------------------------------------------------------------
// The (q,r)-Eulerian polynomial A_n(t,r,q) and friends
// ---------------------------------------------------------------------------

// The three equidistributed statistic triples; listed as (q-, t-, r-exponent).
enum class Triple { MajExcFix, InvLecPix, AidDesRix };

inline const char* to_string(Triple t) {
    switch (t) {
        case Triple::MajExcFix: return "maj_exc_fix";
        case Triple::InvLecPix: return "inv_lec_pix";
        case Triple::AidDesRix: return "aid_des_rix";
    }
    return "?";
}

// Sum over S_n of t^stat2 r^stat3 q^stat1 where (stat1, stat2, stat3) is
// (maj-exc, exc, fix), (inv-lec, lec, pix) or (ai, des, rix).
inline TRQPoly A_brute(int n, Triple triple) {
    check_bound(n, "A_brute");
    TRQPoly acc;
    for_each_permutation(n, [&](const Word& w) {
        int qe = 0, te = 0, re = 0;
        switch (triple) {
            case Triple::MajExcFix: {
                int exc = 0, fix = 0;
                for (int i = 0; i < n; ++i) {
                    if (w[static_cast<std::size_t>(i)] > i + 1) ++exc;
                    if (w[static_cast<std::size_t>(i)] == i + 1) ++fix;
                }
                qe = maj(w) - exc;
                te = exc;
                re = fix;
                break;
            }
            case Triple::InvLecPix: {
                auto f = detail::factorize_word(w);
                te = f.lec();
                re = f.pix();
                qe = inv(w) - te;
                break;
            }
            case Triple::AidDesRix: {
                qe = ai(w);
                te = des(w);
                re = rix(w);
                break;
            }
        }
        acc.add_term(te, re, QPoly::monomial(qe));
    });
    return acc;
}

// A_{n+1} = r A_n(t,r,q) + t A_n(t,q)
//         + t sum_{j=1}^{n-1} [n j]_q q^j A_j(t,r,q) A_{n-j}(t,q),
// seeded with A_1 = r; A_n(t,q) means r := 1.
inline TRQPoly A_recurrence(int n) {
    if (n < 1) throw std::invalid_argument("A_recurrence: n >= 1 required");
    const TRQPoly t_mono = TRQPoly::monomial(1, 0);
    const TRQPoly r_mono = TRQPoly::monomial(0, 1);
    std::vector<TRQPoly> A{TRQPoly{1}, r_mono};  // A[0] unused beyond r:=1 pairing
    std::vector<TRQPoly> A1{TRQPoly{1}, TRQPoly{1}};
    for (int m = 1; m < n; ++m) {
        TRQPoly next = r_mono * A[static_cast<std::size_t>(m)] + t_mono * A1[static_cast<std::size_t>(m)];
        for (int j = 1; j <= m - 1; ++j) {
            TRQPoly term = A[static_cast<std::size_t>(j)] * A1[static_cast<std::size_t>(m - j)];
            term = term.times_q(q_binomial(m, j).shifted(j));
            next += t_mono * term;
        }
        A.push_back(next);
        A1.push_back(next.at_r1());
    }
    return A[static_cast<std::size_t>(n)];
}

// A_n(t,q) = A_n(t,1,q); n = 0 gives 1.
inline TRQPoly A_tq(int n) {
    if (n == 0) return TRQPoly{1};
    return A_recurrence(n).at_r1();
}

// q-Eulerian number A_{n,k}(q).
inline QPoly A_num(int n, int k) { return A_tq(n).coeff(k, 0); }

// Fixed point q-Eulerian number A_{n,k}^{(j)}(q).
inline QPoly A_num_fix(int n, int k, int j) {
    if (n == 0) return (k == 0 && j == 0) ? QPoly{1} : QPoly{};
    return A_recurrence(n).coeff(k, j);
}

// ---------------------------------------------------------------------------
// Restricted q-Eulerian polynomials
// ---------------------------------------------------------------------------

enum class BRoute { Lemma41, Lemma44, ClosedForm };

inline const char* to_string(BRoute r) {
    switch (r) {
        case BRoute::Lemma41: return "lemma41";
        case BRoute::Lemma44: return "lemma44";
        case BRoute::ClosedForm: return "closed_form";
    }
    return "?";
}

// B_n^{(j)}(t,q) as a polynomial in t and q (no r), by three routes:
//  - Lemma41: sum of q^(ai + 2j - n - 1) t^des over permutations with the
//    maximum at position j (j >= 2; the exponent is provably positive and a
//    negative one is a hard error, not a wraparound);
//  - Lemma44: sum of q^(inv - lec) t^lec over permutations with the letter 1
//    at position j+1, including the gap form when j = n;
//  - ClosedForm: q^(j-1) A_{j-1}(t,q) for n = j and
//    t q^(j-1) [n-1 j-1]_q A_{j-1}(t,q) A_{n-j}(t,q) for n > j.
inline TRQPoly B_restricted(int n, int j, BRoute route) {
    if (n < 1 || j < 1 || j > n) throw std::invalid_argument("B_restricted: need 1 <= j <= n");
    switch (route) {
        case BRoute::Lemma41: {
            if (j < 2) throw std::invalid_argument("B_restricted: route lemma41 requires j >= 2");
            check_bound(n, "B_restricted");
            TRQPoly acc;
            Word rest;
            for (int x = 1; x < n; ++x) rest.push_back(x);
            for_each_arrangement(rest, [&](const Word& arr) {
                Word w(arr.begin(), arr.begin() + (j - 1));
                w.push_back(n);
                w.insert(w.end(), arr.begin() + (j - 1), arr.end());
                const int shifted_exp = ai(w) + 2 * j - n - 1;
                if (shifted_exp < 1)
                    throw std::logic_error("B_restricted: nonpositive exponent in lemma41 route");
                acc.add_term(des(w), 0, QPoly::monomial(shifted_exp));
            });
            return acc;
        }
        case BRoute::Lemma44: {
            check_bound(n, "B_restricted");
            TRQPoly acc;
            Word rest;
            for (int x = 2; x <= n; ++x) rest.push_back(x);
            if (j == n) {
                for_each_arrangement(rest, [&](const Word& arr) {
                    GapPerm g{arr};
                    acc.add_term(lec_pix(g).first, 0,
                                 QPoly::monomial(inv_gap(g) - lec_pix(g).first));
                });
            } else {
                for_each_arrangement(rest, [&](const Word& arr) {
                    Word w(arr.begin(), arr.begin() + j);
                    w.push_back(1);
                    w.insert(w.end(), arr.begin() + j, arr.end());
                    auto f = detail::factorize_word(w);
                    acc.add_term(f.lec(), 0, QPoly::monomial(inv(w) - f.lec()));
                });
            }
            return acc;
        }
        case BRoute::ClosedForm: {
            if (n == j) return A_tq(j - 1).times_q(QPoly::monomial(j - 1));
            TRQPoly p = A_tq(j - 1) * A_tq(n - j) * TRQPoly::monomial(1, 0);
            return p.times_q(q_binomial(n - 1, j - 1).shifted(j - 1));
        }
    }
    throw std::logic_error("B_restricted: unknown route");
}

// Restricted q-Eulerian number B_{n,k}^{(j)}(q); zero for n < j.
inline QPoly B_num(int n, int k, int j, BRoute route = BRoute::ClosedForm) {
    if (n < j) return QPoly{};
    return B_restricted(n, j, route).coeff(k, 0);
}

// B_n^{(j)}(t,r,q): sum of t^des r^rix q^ai over permutations with the
// maximum at position j.
inline TRQPoly B_trq(int n, int j) {
    if (n < 1 || j < 1 || j > n) throw std::invalid_argument("B_trq: need 1 <= j <= n");
    check_bound(n, "B_trq");
    TRQPoly acc;
    Word rest;
    for (int x = 1; x < n; ++x) rest.push_back(x);
    for_each_arrangement(rest, [&](const Word& arr) {
        Word w(arr.begin(), arr.begin() + (j - 1));
        w.push_back(n);
        w.insert(w.end(), arr.begin() + (j - 1), arr.end());
        acc.add_term(des(w), rix(w), QPoly::monomial(ai(w)));
    });
    return acc;
}

// ---------------------------------------------------------------------------
// Derangement-type sums (permutations with pix = 0)
// ---------------------------------------------------------------------------

// LHS: sum over pix-derangements with lec = a of q^(inv - lec).
// RHS: sum_k (-1)^(n-k) [n k]_q q^C(n-k,2) A_{k,a}(q).
// Returns both sides and insists they agree.
inline std::pair<QPoly, QPoly> derangement_sum(int n, int a) {
    check_bound(n, "derangement_sum");
    if (a < 0) throw std::invalid_argument("derangement_sum: negative a");
    QPoly lhs;
    for_each_permutation(n, [&](const Word& w) {
        auto f = detail::factorize_word(w);
        if (f.pix() != 0 || f.lec() != a) return;
        lhs += QPoly::monomial(inv(w) - f.lec());
    });
    QPoly rhs;
    for (int k = 0; k <= n; ++k) {
        QPoly term = q_binomial(n, k).shifted(static_cast<int>(choose2(n - k))) * A_num(k, a);
        rhs += ((n - k) % 2 == 0) ? term : -term;
    }
    if (!(lhs == rhs))
        throw std::logic_error("derangement_sum: the two sides disagree at n = " +
                               std::to_string(n) + ", a = " + std::to_string(a));
    return {lhs, rhs};
}

// Classical Eulerian polynomial: sum of t^des over S_n.
inline TRQPoly classic_eulerian(int n) {
    check_bound(n, "classic_eulerian");
    TRQPoly acc;
    for_each_permutation(n, [&](const Word& w) { acc.add_term(des(w), 0, QPoly{1}); });
    return acc;
}

// ---------------------------------------------------------------------------
// Stratum generating functions for the composite objects
// ---------------------------------------------------------------------------

// Visits every two-pix-permutation of [n] (empty hook lists included).
inline void for_each_twopix(int n, const std::function<void(const TwoPix&)>& fn) {
    check_bound(n, "for_each_twopix");
    if (n < 1) throw std::invalid_argument("for_each_twopix: n >= 1 required");
    Word ground;
    for (int x = 1; x <= n; ++x) ground.push_back(x);
    for_each_subset(ground, [&](const Word& p2) {
        Word rest;
        std::set_difference(ground.begin(), ground.end(), p2.begin(), p2.end(),
                            std::back_inserter(rest));
        for_each_arrangement(rest, [&](const Word& sigma) {
            auto f = detail::factorize_word(sigma);
            fn(TwoPix{f.prefix, f.hooks, p2});
        });
    });
}

// Sum of q^(inv - lec) over two-pix-permutations with |p1| = j and lec = a.
inline QPoly twopix_stratum(int n, int j, int a) {
    QPoly acc;
    for_each_twopix(n, [&](const TwoPix& v) {
        if (static_cast<int>(v.p1.size()) == j && v.lec() == a)
            acc += QPoly::monomial(v.inv_minus_lec());
    });
    return acc;
}

// Visits every j-restricted two-pix-permutation of [n] with the given j.
inline void for_each_jres(int n, int j, const std::function<void(const JResTwoPix&)>& fn) {
    check_bound(n, "for_each_jres");
    if (n < 1 || j < 1) throw std::invalid_argument("for_each_jres: need n >= 1, j >= 1");
    Word others;
    for (int x = 2; x <= n; ++x) others.push_back(x);
    for_each_subset(others, [&](const Word& p2) {
        const int m = n - static_cast<int>(p2.size());  // |X|, with 1 in X
        if (j > m) return;
        Word xrest;
        std::set_difference(others.begin(), others.end(), p2.begin(), p2.end(),
                            std::back_inserter(xrest));
        for_each_arrangement(xrest, [&](const Word& arr) {
            JResTwoPix v;
            v.j = j;
            v.p2 = p2;
            if (j == m) {
                v.pi = GapPerm{arr};
            } else {
                Word w(arr.begin(), arr.begin() + j);
                w.push_back(1);
                w.insert(w.end(), arr.begin() + j, arr.end());
                v.pi = Permutation{w};
            }
            fn(v);
        });
    });
}

// Sum of q^(inv - lec) over j-restricted two-pix-permutations with lec = a.
inline QPoly jres_stratum(int n, int j, int a) {
    QPoly acc;
    for_each_jres(n, j, [&](const JResTwoPix& v) {
        if (v.lec() == a) acc += QPoly::monomial(v.inv_minus_lec());
    });
    return acc;
}

}  // namespace qeulerian
