#pragma once

#include <string>
#include <vector>

#include "qeulerian/eulerian.hpp"
#include "qeulerian/qseries.hpp"
#include "qeulerian/report.hpp"

namespace qeulerian {

// Which route feeds the polynomial inputs of a verifier: the cheap closed
// forms / recurrences, or brute enumeration. Independent routes guard
// against a bug making both sides wrong the same way.
enum class VerifyRoute { Cheap, Brute };

namespace detail {

inline QPoly a_num(int n, int k, VerifyRoute route) {
    if (route == VerifyRoute::Cheap) return A_num(n, k);
    return A_brute(n, Triple::InvLecPix).at_r1().coeff(k, 0);
}

inline QPoly a_num_fix(int n, int k, int j, VerifyRoute route) {
    if (route == VerifyRoute::Cheap) return A_num_fix(n, k, j);
    if (n == 0) return (k == 0 && j == 0) ? QPoly{1} : QPoly{};
    return A_brute(n, Triple::InvLecPix).coeff(k, j);
}

inline QPoly b_num(int n, int k, int j, VerifyRoute route) {
    if (n < j) return QPoly{};
    return B_num(n, k, j, route == VerifyRoute::Cheap ? BRoute::ClosedForm : BRoute::Lemma44);
}

inline std::string qpoly_witness(const QPoly& lhs, const QPoly& rhs) {
    const int dmax = std::max(lhs.degree(), rhs.degree());
    for (int d = 0; d <= dmax; ++d)
        if (!(lhs.coeff(d) == rhs.coeff(d)))
            return "first mismatch at q^" + std::to_string(d) + ": " + lhs.coeff(d).str() +
                   " vs " + rhs.coeff(d).str();
    return "";
}

inline VerifyReport qpoly_report(std::string identity,
                                 std::map<std::string, long long> params,
                                 const QPoly& lhs, const QPoly& rhs) {
    VerifyReport rep;
    rep.identity = std::move(identity);
    rep.params = std::move(params);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.pass = lhs == rhs;
    if (!rep.pass) rep.witness = qpoly_witness(lhs, rhs);
    return rep;
}

inline std::string trq_witness(const TRQPoly& lhs, const TRQPoly& rhs) {
    TRQPoly diff = lhs - rhs;
    const auto& [d, c] = *diff.terms().begin();
    int qd = 0;
    while (c.coeff(qd).is_zero()) ++qd;
    return "first mismatch at t^" + std::to_string(d.t) + " r^" + std::to_string(d.r) +
           " q^" + std::to_string(qd);
}

}  // namespace detail

// sum_{k>=1} [a+b k]_q A_{k,a-1}(q) = same with b-1 (a, b >= 1).
inline VerifyReport verify_th16(int a, int b, VerifyRoute route = VerifyRoute::Cheap) {
    if (a < 1 || b < 1) throw std::invalid_argument("verify_th16: a, b >= 1 required");
    const int n = a + b;
    check_bound(n, "verify_th16");
    QPoly lhs, rhs;
    for (int k = 1; k <= n; ++k) {
        const QPoly bin = q_binomial(n, k);
        lhs += bin * detail::a_num(k, a - 1, route);
        rhs += bin * detail::a_num(k, b - 1, route);
    }
    return detail::qpoly_report("th16", {{"a", a}, {"b", b}}, lhs, rhs);
}

// sum_{k>=1} (-1)^k [a+b k]_q q^C(a+b-k,2) A_{k,a}(q) = same with b.
inline VerifyReport verify_th17(int a, int b, VerifyRoute route = VerifyRoute::Cheap) {
    if (a < 1 || b < 1) throw std::invalid_argument("verify_th17: a, b >= 1 required");
    const int n = a + b;
    check_bound(n, "verify_th17");
    QPoly lhs, rhs;
    for (int k = 1; k <= n; ++k) {
        QPoly bin = q_binomial(n, k).shifted(static_cast<int>(choose2(n - k)));
        if (k % 2 != 0) bin = -bin;
        lhs += bin * detail::a_num(k, a, route);
        rhs += bin * detail::a_num(k, b, route);
    }
    return detail::qpoly_report("th17", {{"a", a}, {"b", b}}, lhs, rhs);
}

// sum_{k>=1} [a+b+j+1 k]_q A^{(j)}_{k,a}(q) = same with b (a, b >= 1, j >= 0).
inline VerifyReport verify_syfix(int a, int b, int j, VerifyRoute route = VerifyRoute::Cheap) {
    if (a < 1 || b < 1 || j < 0)
        throw std::invalid_argument("verify_syfix: a, b >= 1 and j >= 0 required");
    const int n = a + b + j + 1;
    check_bound(n, "verify_syfix");
    QPoly lhs, rhs;
    for (int k = 1; k <= n; ++k) {
        const QPoly bin = q_binomial(n, k);
        lhs += bin * detail::a_num_fix(k, a, j, route);
        rhs += bin * detail::a_num_fix(k, b, j, route);
    }
    return detail::qpoly_report("syfix", {{"a", a}, {"b", b}, {"j", j}}, lhs, rhs);
}

// sum_{k>=1} [a+b+1 k-1]_q B^{(j)}_{k,a}(q) = same with b (a, b >= 1, j >= 2).
inline VerifyReport verify_main1(int a, int b, int j, VerifyRoute route = VerifyRoute::Cheap) {
    if (a < 1 || b < 1) throw std::invalid_argument("verify_main1: a, b >= 1 required");
    if (j < 2)
        throw std::invalid_argument(
            "verify_main1: j = 1 is excluded (that case is the th16 identity)");
    const int n = a + b + 2;
    check_bound(n, "verify_main1");
    QPoly lhs, rhs;
    for (int k = 1; k <= n; ++k) {
        const QPoly bin = q_binomial(a + b + 1, k - 1);
        lhs += bin * detail::b_num(k, a, j, route);
        rhs += bin * detail::b_num(k, b, j, route);
    }
    return detail::qpoly_report("main1", {{"a", a}, {"b", b}, {"j", j}}, lhs, rhs);
}

// Both sides of the pix-derangement expansion (exact equality is asserted
// inside derangement_sum; reported here for the CLI).
inline VerifyReport verify_pixve(int n, int a) {
    auto [lhs, rhs] = derangement_sum(n, a);
    return detail::qpoly_report("pixve", {{"n", n}, {"a", a}}, lhs, rhs);
}

// Coefficient symmetries A^{(j)}_{n,k}(q) = A^{(j)}_{n,n-j-k}(q) and
// B^{(j)}_{n,k}(q) = B^{(j)}_{n,n-1-k}(q), checked both as polynomial
// equalities and by transporting each permutation through the involution
// that proves them.
inline std::vector<VerifyReport> verify_symmetries(int n, VerifyRoute route = VerifyRoute::Cheap) {
    check_bound(n, "verify_symmetries");
    std::vector<VerifyReport> reps;

    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n - j; ++k) {
            QPoly lhs = detail::a_num_fix(n, k, j, route);
            QPoly rhs = detail::a_num_fix(n, n - j - k, j, route);
            reps.push_back(detail::qpoly_report("A_symmetry", {{"n", n}, {"k", k}, {"j", j}},
                                                lhs, rhs));
        }
    for (int j = 2; j < n; ++j)
        for (int k = 0; k <= n - 1; ++k) {
            QPoly lhs = detail::b_num(n, k, j, route);
            QPoly rhs = detail::b_num(n, n - 1 - k, j, route);
            reps.push_back(detail::qpoly_report("B_symmetry", {{"n", n}, {"k", k}, {"j", j}},
                                                lhs, rhs));
        }

    // Transport: the pix-preserving involution behind the A-symmetry.
    {
        VerifyReport rep;
        rep.identity = "A_symmetry_transport";
        rep.params["n"] = n;
        rep.pass = true;
        for_each_permutation(n, [&](const Word& w) {
            if (!rep.pass) return;
            Permutation p{w};
            auto fp = hook_factorize(p);
            Permutation u = sympix_involution(p);
            auto fu = hook_factorize(u);
            const bool ok = fu.pix() == fp.pix() &&
                            fu.lec() == n - fp.pix() - fp.lec() &&
                            inv(u.letters()) - fu.lec() == inv(w) - fp.lec() &&
                            sympix_involution(u) == p;
            if (!ok) {
                rep.pass = false;
                rep.witness = "contract fails at " + to_string(p);
            }
        });
        rep.lhs = "sympix transport on S_" + std::to_string(n);
        rep.rhs = rep.lhs;
        reps.push_back(rep);
    }

    // Transport: g complements des and preserves ai on each S_n^{(j)}.
    {
        VerifyReport rep;
        rep.identity = "B_symmetry_transport";
        rep.params["n"] = n;
        rep.pass = true;
        for_each_permutation(n, [&](const Word& w) {
            if (!rep.pass) return;
            const auto jt = std::max_element(w.begin(), w.end());
            const int j = static_cast<int>(jt - w.begin()) + 1;
            if (j <= 1 || j >= n) return;
            Permutation p{w};
            Permutation u = reflect_g(p);
            const bool ok = u.letters()[static_cast<std::size_t>(j) - 1] == n &&
                            ai(u.letters()) == ai(w) &&
                            des(u.letters()) == n - 1 - des(w) &&
                            reflect_g(u) == p;
            if (!ok) {
                rep.pass = false;
                rep.witness = "contract fails at " + to_string(p);
            }
        });
        rep.lhs = "reflect_g transport on S_" + std::to_string(n);
        rep.rhs = rep.lhs;
        reps.push_back(rep);
    }
    return reps;
}

// Multiset equality of the three statistic triples via their full-exponent
// generating polynomials: sum t^exc r^fix q^maj, sum t^lec r^pix q^inv and
// sum t^des r^rix q^aid.
inline VerifyReport verify_equidistribution(int n) {
    check_bound(n, "verify_equidistribution");
    TRQPoly fp_mef, fp_ilp, fp_adr;
    for_each_permutation(n, [&](const Word& w) {
        int exc = 0, fix = 0;
        for (int i = 0; i < n; ++i) {
            if (w[static_cast<std::size_t>(i)] > i + 1) ++exc;
            if (w[static_cast<std::size_t>(i)] == i + 1) ++fix;
        }
        fp_mef.add_term(exc, fix, QPoly::monomial(maj(w)));
        auto f = detail::factorize_word(w);
        fp_ilp.add_term(f.lec(), f.pix(), QPoly::monomial(inv(w)));
        fp_adr.add_term(des(w), rix(w), QPoly::monomial(aid(w)));
    });
    VerifyReport rep;
    rep.identity = "equidistribution";
    rep.params["n"] = n;
    rep.lhs = fp_mef.str();
    rep.rhs = fp_ilp.str();
    rep.pass = fp_mef == fp_ilp && fp_mef == fp_adr;
    if (!rep.pass) {
        if (!(fp_mef == fp_ilp)) rep.witness = "(maj,exc,fix) vs (inv,lec,pix): " +
                                               detail::trq_witness(fp_mef, fp_ilp);
        else rep.witness = "(maj,exc,fix) vs (aid,des,rix): " + detail::trq_witness(fp_mef, fp_adr);
    }
    return rep;
}

// sum over two-pix-permutations with |p1| = j, lec = a of q^(inv-lec)
// equals sum_k [n k]_q A^{(j)}_{k,a}(q).
inline VerifyReport verify_lemma24(int n, int j, int a, VerifyRoute route = VerifyRoute::Cheap) {
    check_bound(n, "verify_lemma24");
    QPoly lhs = twopix_stratum(n, j, a);
    QPoly rhs;
    for (int k = 0; k <= n; ++k)
        rhs += q_binomial(n, k) * detail::a_num_fix(k, a, j, route);
    return detail::qpoly_report("lemma24", {{"n", n}, {"j", j}, {"a", a}}, lhs, rhs);
}

// sum over j-restricted two-pix-permutations with lec = a of q^(inv-lec)
// equals sum_{k>=1} [n-1 k-1]_q B^{(j)}_{k,a}(q).
inline VerifyReport verify_lemma46(int n, int j, int a, VerifyRoute route = VerifyRoute::Cheap) {
    check_bound(n, "verify_lemma46");
    QPoly lhs = jres_stratum(n, j, a);
    QPoly rhs;
    for (int k = 1; k <= n; ++k)
        rhs += q_binomial(n - 1, k - 1) * detail::b_num(k, a, j, route);
    return detail::qpoly_report("lemma46", {{"n", n}, {"j", j}, {"a", a}}, lhs, rhs);
}

}  // namespace qeulerian
