#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qeulerian/eulerian.hpp"
#include "qeulerian/report.hpp"
#include "qeulerian/trqpoly.hpp"

namespace qeulerian {

// Truncated formal series in z in the q-EGF basis: the stored coefficient
// a_n stands for a_n z^n/(q;q)_n. In this basis multiplication is the
// q-binomial convolution and the Eulerian differential operator is a plain
// left shift, so no division by (q;q)_n ever happens.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    }

    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.c_[0] = TRQPoly{1};
        return s;
    }

    // e(az;q) = sum (az)^n/(q;q)_n for a monomial a in t, r (q powers allowed).
    static TruncSeries q_exponential(const TRQPoly& a, int order) {
        if (!a.is_zero() &&
            (a.terms().size() != 1 || a.terms().begin()->second.term_count() != 1))
            throw std::invalid_argument("q_exponential: a must be a monomial");
        TruncSeries s(order);
        TRQPoly pw{1};
        for (int n = 0; n <= order; ++n) {
            s.c_[static_cast<std::size_t>(n)] = pw;
            pw *= a;
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const TRQPoly& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    TRQPoly& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
        return r;
    }

    // (fg)_n = sum_k [n k]_q f_k g_{n-k}.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            TRQPoly acc;
            for (int k = 0; k <= n; ++k)
                acc += (a[k] * b[n - k]).times_q(q_binomial(n, k));
            r[n] = acc;
        }
        return r;
    }

    TruncSeries scaled(const TRQPoly& c) const {
        TruncSeries r = *this;
        for (auto& a : r.c_) a *= c;
        return r;
    }

    // Multiplicative inverse to the truncation order; the constant term must
    // be +1 or -1 so that inversion stays inside polynomial coefficients.
    TruncSeries inverse() const {
        const bool plus = c_[0] == TRQPoly{1};
        if (!plus && !(c_[0] == TRQPoly{-1}))
            throw std::invalid_argument("TruncSeries::inverse: constant term must be +-1");
        const TRQPoly c0inv = plus ? TRQPoly{1} : TRQPoly{-1};
        TruncSeries g(order());
        g[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            TRQPoly acc;
            for (int k = 1; k <= n; ++k)
                acc += (c_[static_cast<std::size_t>(k)] * g[n - k]).times_q(q_binomial(n, k));
            g[n] = -(c0inv * acc);
        }
        return g;
    }

    // Eulerian differential operator: f -> (f(z) - f(qz))/z, which in this
    // basis is the left shift. Order drops by one.
    TruncSeries delta() const {
        if (order() < 1) throw std::invalid_argument("TruncSeries::delta: order 0");
        TruncSeries r(order() - 1);
        for (int n = 0; n <= r.order(); ++n) r[n] = c_[static_cast<std::size_t>(n) + 1];
        return r;
    }

    // z -> qz, i.e. a_n -> q^n a_n.
    TruncSeries subst_qz() const {
        TruncSeries r = *this;
        for (int n = 0; n <= order(); ++n)
            r[n] = r[n].times_q(QPoly::monomial(n));
        return r;
    }

    // Multiply by z^s/(q;q)_s: c_m = [m s]_q a_{m-s}.
    TruncSeries basis_shift(int s) const {
        if (s < 0) throw std::invalid_argument("TruncSeries::basis_shift: negative shift");
        TruncSeries r(order());
        for (int m = s; m <= order(); ++m)
            r[m] = c_[static_cast<std::size_t>(m - s)].times_q(q_binomial(m, s));
        return r;
    }

    // Dump format consumed by the CLI: one line per n.
    std::string str() const {
        std::string out;
        for (int n = 0; n <= order(); ++n)
            out += std::to_string(n) + ": " + c_[static_cast<std::size_t>(n)].str() + "\n";
        return out;
    }

private:
    std::vector<TRQPoly> c_;
};

// The denominator e(tz;q) - t e(z;q) divided by its constant term 1 - t,
// still a polynomial series: 1, 0, then -(t + t^2 + ... + t^{n-1}).
inline TruncSeries eulerian_denominator_rescaled(int order) {
    TruncSeries d(order);
    d[0] = TRQPoly{1};
    for (int n = 2; n <= order; ++n) {
        TRQPoly c;
        for (int i = 1; i <= n - 1; ++i) c -= TRQPoly::monomial(i, 0);
        d[n] = c;
    }
    return d;
}

// The series whose coefficients are A_n(t,r,q), i.e. the expansion of
// (1-t) e(rz;q) / (e(tz;q) - t e(z;q)) with the 1-t factors cancelled
// against each other before inverting.
inline TruncSeries eulerian_egf(int order) {
    TruncSeries num = TruncSeries::q_exponential(TRQPoly::monomial(0, 1), order);
    return num * eulerian_denominator_rescaled(order).inverse();
}

// The series of (1-t) e(tz;q) / (e(tz;q) - t e(z;q)); coefficient n is
// B_{n+1}^{(1)}(t,q).
inline TruncSeries restricted_egf_core(int order) {
    TruncSeries num = TruncSeries::q_exponential(TRQPoly::monomial(1, 0), order);
    return num * eulerian_denominator_rescaled(order).inverse();
}

// Coefficient-wise checks of the generating function identities:
// the A_n expansion against brute enumeration for n <= N, and the restricted
// expansion q^{j-1} A_{j-1}(t,q) (z^{j-1}/(q;q)_{j-1}) core against the
// enumerated B_n^{(j)}(t,q) for every j <= N.
inline VerifyReport verify_egf(int N, Triple triple = Triple::MajExcFix) {
    check_bound(N, "verify_egf");
    VerifyReport rep;
    rep.identity = "egf";
    rep.params["order"] = N;
    rep.pass = true;
    TruncSeries lhs = eulerian_egf(N);
    for (int n = 0; n <= N; ++n) {
        TRQPoly brute = A_brute(n, triple);
        if (!(lhs[n] == brute)) {
            rep.pass = false;
            rep.witness = "A coefficient mismatch at n = " + std::to_string(n) +
                          ": series " + lhs[n].str() + " vs enumeration " + brute.str();
            rep.lhs = lhs[n].str();
            rep.rhs = brute.str();
            return rep;
        }
    }
    TruncSeries core = restricted_egf_core(N);
    for (int j = 1; j <= N; ++j) {
        const TRQPoly scale = A_tq(j - 1).times_q(QPoly::monomial(j - 1));
        TruncSeries side = core.basis_shift(j - 1).scaled(scale);
        for (int n = j; n <= N; ++n) {
            TRQPoly expect = B_restricted(n, j, BRoute::Lemma44);
            if (!(side[n - 1] == expect)) {
                rep.pass = false;
                rep.witness = "B coefficient mismatch at n = " + std::to_string(n) +
                              ", j = " + std::to_string(j);
                rep.lhs = side[n - 1].str();
                rep.rhs = expect.str();
                return rep;
            }
        }
    }
    rep.lhs = "egf expansions to order " + std::to_string(N);
    rep.rhs = "brute enumerations to order " + std::to_string(N);
    return rep;
}

// delta(fg) = f(qz) delta(g) + delta(f) g, and for invertible f,
// delta(1/f) = -delta(f) / (f(qz) f(z)) checked multiplied through.
inline VerifyReport check_delta_lemma(const TruncSeries& f, const TruncSeries& g) {
    if (f.order() < 1 || g.order() < 1)
        throw std::invalid_argument("check_delta_lemma: orders must be >= 1");
    VerifyReport rep;
    rep.identity = "delta_lemma";
    rep.params["order_f"] = f.order();
    rep.params["order_g"] = g.order();
    TruncSeries prod_lhs = (f * g).delta();
    TruncSeries prod_rhs = f.subst_qz() * g.delta() + f.delta() * g;
    // Both sides truncated to the common order.
    const int ord = std::min(prod_lhs.order(), prod_rhs.order());
    for (int n = 0; n <= ord; ++n) {
        if (!(prod_lhs[n] == prod_rhs[n])) {
            rep.pass = false;
            rep.witness = "product rule fails at n = " + std::to_string(n);
            rep.lhs = prod_lhs[n].str();
            rep.rhs = prod_rhs[n].str();
            return rep;
        }
    }
    bool invertible = f[0] == TRQPoly{1} || f[0] == TRQPoly{-1};
    if (invertible) {
        TruncSeries inv_f = f.inverse();
        TruncSeries lhs = inv_f.delta() * f.subst_qz() * f;
        TruncSeries rhs = TruncSeries(f.order()) - f.delta();  // -delta(f), padded
        const int ord2 = std::min(lhs.order(), rhs.order());
        for (int n = 0; n <= ord2; ++n) {
            if (!(lhs[n] == rhs[n])) {
                rep.pass = false;
                rep.witness = "reciprocal rule fails at n = " + std::to_string(n);
                rep.lhs = lhs[n].str();
                rep.rhs = rhs[n].str();
                return rep;
            }
        }
    }
    rep.pass = true;
    rep.lhs = "delta rules";
    rep.rhs = "delta rules";
    return rep;
}

}  // namespace qeulerian
