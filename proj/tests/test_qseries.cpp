#include "doctest.h"

#include <random>

#include "qeulerian/qseries.hpp"

using namespace qeulerian;

namespace {

TruncSeries random_unit_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
    TruncSeries f(order);
    f[0] = TRQPoly{1};
    for (int n = 1; n <= order; ++n) {
        TRQPoly c;
        c += TRQPoly::monomial(deg(rng), 0, QPoly{coef(rng)});
        c += TRQPoly::monomial(0, deg(rng), QPoly::monomial(deg(rng), BigInt{coef(rng)}));
        f[n] = c;
    }
    return f;
}

// Plain z-polynomial with TRQPoly coefficients; just enough structure to run
// the definitional (f(z) - f(qz))/z computation symbolically.
using ZPoly = std::vector<TRQPoly>;

ZPoly zpoly_delta(const ZPoly& f) {
    ZPoly out;
    for (std::size_t n = 1; n < f.size(); ++n) {
        // Coefficient of z^n in f(z) - f(qz) is f_n (1 - q^n).
        out.push_back(f[n].times_q(QPoly{1} - QPoly::monomial(static_cast<int>(n))));
    }
    return out;
}

}  // namespace

TEST_CASE("q-exponential coefficients") {
    TruncSeries e1 = TruncSeries::q_exponential(TRQPoly{1}, 4);
    for (int n = 0; n <= 4; ++n) CHECK(e1[n] == TRQPoly{1});

    TruncSeries et = TruncSeries::q_exponential(TRQPoly::monomial(1, 0), 4);
    for (int n = 0; n <= 4; ++n) CHECK(et[n] == TRQPoly::monomial(n, 0));

    TruncSeries er = TruncSeries::q_exponential(TRQPoly::monomial(0, 1), 3);
    CHECK(er[3] == TRQPoly::monomial(0, 3));

    CHECK_THROWS_AS(TruncSeries::q_exponential(TRQPoly{1} + TRQPoly::monomial(1, 0), 3),
                    std::invalid_argument);
}

TEST_CASE("series multiplication is q-binomial convolution") {
    TruncSeries e = TruncSeries::q_exponential(TRQPoly{1}, 4);
    TruncSeries one = TruncSeries::one(4);
    CHECK(e * one == e);

    TruncSeries sq = e * e;
    CHECK(sq[2].str() == "3+q");  // [2 0] + [2 1] + [2 2]
}

TEST_CASE("series inversion") {
    CHECK(TruncSeries::one(5).inverse() == TruncSeries::one(5));

    TruncSeries et = TruncSeries::q_exponential(TRQPoly::monomial(1, 0), 8);
    CHECK(et * et.inverse() == TruncSeries::one(8));

    std::mt19937 rng(42);
    for (int it = 0; it < 12; ++it) {
        TruncSeries f = random_unit_series(rng, 8);
        CHECK(f * f.inverse() == TruncSeries::one(8));
    }

    TruncSeries bad(3);
    bad[0] = TRQPoly{2};
    CHECK_THROWS_AS(bad.inverse(), std::invalid_argument);
}

TEST_CASE("rescaled Eulerian denominator has unit constant term") {
    TruncSeries d = eulerian_denominator_rescaled(6);
    CHECK(d[0] == TRQPoly{1});
    CHECK(d[1].is_zero());
    CHECK(d[3] == -(TRQPoly::monomial(1, 0) + TRQPoly::monomial(2, 0)));
    CHECK(d.inverse()[0] == TRQPoly{1});
}

TEST_CASE("delta is the basis shift and kills constants") {
    TruncSeries e = TruncSeries::q_exponential(TRQPoly::monomial(1, 1), 6);
    TruncSeries d = e.delta();
    for (int n = 0; n <= 5; ++n) CHECK(d[n] == e[n + 1]);
    CHECK_THROWS_AS(TruncSeries::one(0).delta(), std::invalid_argument);

    TruncSeries c = TruncSeries::one(4);
    TruncSeries dc = c.delta();
    for (int n = 0; n <= 3; ++n) CHECK(dc[n].is_zero());
}

TEST_CASE("delta of e(az;q) is a e(az;q)") {
    for (const TRQPoly& a : {TRQPoly{1}, TRQPoly::monomial(1, 0), TRQPoly::monomial(0, 1),
                             TRQPoly::monomial(0, 1, QPoly::monomial(1))}) {
        TruncSeries e = TruncSeries::q_exponential(a, 6);
        TruncSeries lhs = e.delta();
        for (int n = 0; n <= 5; ++n) CHECK(lhs[n] == a * e[n]);
    }
}

TEST_CASE("delta as shift agrees with the definitional computation") {
    // Clear denominators: multiply a_n z^n/(q;q)_n through by (q;q)_N.
    const int N = 6;
    TruncSeries f = eulerian_egf(N);
    ZPoly cleared;
    for (int n = 0; n <= N; ++n) {
        QPoly scale{1};
        for (int i = n + 1; i <= N; ++i) scale *= QPoly{1} - QPoly::monomial(i);
        cleared.push_back(f[n].times_q(scale));
    }
    ZPoly lhs = zpoly_delta(cleared);
    TruncSeries shifted = f.delta();
    for (int m = 0; m < N; ++m) {
        QPoly scale{1};
        for (int i = m + 1; i <= N; ++i) scale *= QPoly{1} - QPoly::monomial(i);
        // (q;q)_N / (q;q)_m = (q;q)_N/(q;q)_{m+1} * (1 - q^{m+1}).
        CHECK(lhs[static_cast<std::size_t>(m)] == shifted[m].times_q(scale));
    }
}

TEST_CASE("z -> qz substitution commutes with multiplication") {
    std::mt19937 rng(7);
    for (int it = 0; it < 8; ++it) {
        TruncSeries f = random_unit_series(rng, 5);
        TruncSeries g = random_unit_series(rng, 5);
        CHECK((f * g).subst_qz() == f.subst_qz() * g.subst_qz());
    }
}

TEST_CASE("delta product and reciprocal rules") {
    TruncSeries e = TruncSeries::q_exponential(TRQPoly{1}, 6);
    CHECK(check_delta_lemma(e, e).pass);

    TruncSeries c = TruncSeries::one(6);
    CHECK(check_delta_lemma(c, e).pass);

    // The Eq.-style denominator, with its 1-t stripped off.
    TruncSeries d = eulerian_denominator_rescaled(6);
    CHECK(check_delta_lemma(d, e).pass);

    std::mt19937 rng(99);
    for (int it = 0; it < 6; ++it)
        CHECK(check_delta_lemma(random_unit_series(rng, 6), random_unit_series(rng, 6)).pass);
}

TEST_CASE("delta applied to the EGF shifts the A-coefficients") {
    const int N = 7;
    TruncSeries rhs = eulerian_egf(N).delta();
    for (int n = 0; n < N; ++n) CHECK(rhs[n] == A_brute(n + 1, Triple::MajExcFix));
}

TEST_CASE("generating function verification") {
    VerifyReport r0 = verify_egf(0);
    CHECK(r0.pass);

    VerifyReport r4 = verify_egf(4);
    CHECK(r4.pass);

    VerifyReport r5 = verify_egf(5, Triple::AidDesRix);
    CHECK(r5.pass);
}

TEST_CASE("series dump format") {
    TruncSeries et = TruncSeries::q_exponential(TRQPoly::monomial(1, 0), 2);
    CHECK(et.str() == "0: 1\n1: t\n2: t^2\n");
}
