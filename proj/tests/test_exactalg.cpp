#include "doctest.h"

#include <random>
#include <vector>

#include "qeulerian/qpoly.hpp"
#include "qeulerian/trqpoly.hpp"

using namespace qeulerian;

namespace {

// Independent brute-force oracle for the Gaussian binomial: the generating
// polynomial of inv(A, [n]\A) over all k-subsets A of [n].
QPoly q_binomial_by_subsets(int n, int k) {
    QPoly acc;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        int cross = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if ((mask >> a & 1u) && !(mask >> b & 1u) && a > b) ++cross;
        acc += QPoly::monomial(cross);
    }
    return acc;
}

long long int_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

QPoly random_qpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4), coef(-5, 5);
    QPoly p;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) p += QPoly::monomial(i, BigInt{coef(rng)});
    return p;
}

}  // namespace

TEST_CASE("bigint arithmetic") {
    BigInt a{123456789012345LL}, b{-987654321LL};
    CHECK((a + b).str() == "123455801358024");
    CHECK((a * b).str() == "-121932631124827861592745");
    CHECK((b - a).str() == "-123457776666666");
    CHECK(BigInt{0}.str() == "0");
    CHECK((-BigInt{5}).str() == "-5");
    CHECK(BigInt{2}.pow(100).str() == "1267650600228229401496703205376");

    BigInt fact{1};
    for (int i = 2; i <= 25; ++i) fact *= BigInt{i};
    CHECK(fact.str() == "15511210043330985984000000");

    CHECK(BigInt{-3} < BigInt{2});
    CHECK(BigInt{-3} < BigInt{-2});
    CHECK(BigInt{7} == BigInt{3} + BigInt{4});
    CHECK((BigInt{5} - BigInt{5}).is_zero());
    CHECK(BigInt{-42}.to_ll() == -42);
}

TEST_CASE("qpoly ring operations") {
    const QPoly one_plus_q = QPoly{1} + QPoly::monomial(1);
    CHECK((one_plus_q * one_plus_q).str() == "1+2q+q^2");

    const QPoly p = QPoly{3} + QPoly::monomial(2, BigInt{-4});
    CHECK(p + QPoly{} == p);

    // Hand oracle: (1+q+q^2)(1-q) telescopes to 1-q^3.
    const QPoly fac = QPoly{1} + QPoly::monomial(1) + QPoly::monomial(2);
    CHECK((fac * (QPoly{1} - QPoly::monomial(1))).str() == "1-q^3");

    CHECK((p - p).is_zero());
    CHECK(p.degree() == 2);
    CHECK(QPoly{}.degree() == -1);
    CHECK(p.eval(BigInt{2}) == BigInt{-13});
}

TEST_CASE("qpoly ring axioms on random inputs") {
    std::mt19937 rng(20130311);
    for (int it = 0; it < 200; ++it) {
        QPoly a = random_qpoly(rng), b = random_qpoly(rng), c = random_qpoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("q-pochhammer") {
    CHECK(q_pochhammer(0) == QPoly{1});
    CHECK(q_pochhammer(1).str() == "1-q");
    CHECK(q_pochhammer(3).str() == "1-q-q^2+q^4+q^5-q^6");
}

TEST_CASE("q-binomial values and ranges") {
    for (int n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == QPoly{1});
    CHECK(q_binomial(2, 1).str() == "1+q");
    CHECK(q_binomial(4, 2).str() == "1+q+2q^2+q^3+q^4");
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(3, 4).is_zero());
}

TEST_CASE("q-binomial symmetry and q=1 specialization") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            CHECK(q_binomial(n, k).at_one() == BigInt{int_binomial(n, k)});
        }
}

TEST_CASE("q-binomial equals the subset-inversion sum") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k) == q_binomial_by_subsets(n, k));
}

TEST_CASE("trqpoly arithmetic and extraction") {
    const TRQPoly t = TRQPoly::monomial(1, 0);
    const TRQPoly r = TRQPoly::monomial(0, 1);

    TRQPoly a2 = r * r + t;  // A_2(t,r,q)
    CHECK(a2.specialize(std::nullopt, BigInt{1}, std::nullopt).str() == "1 + t");
    CHECK(a2.specialize(std::nullopt, std::nullopt, std::nullopt) == a2);

    // A_3(t,q) by hand.
    TRQPoly a3tq = TRQPoly{1} +
                   TRQPoly::monomial(1, 0, QPoly{2} + QPoly::monomial(1) + QPoly::monomial(2)) +
                   TRQPoly::monomial(2, 0);
    CHECK(a3tq.str() == "1 + (2+q+q^2)*t + t^2");
    CHECK(a3tq.coeff(1, 0).str() == "2+q+q^2");
    CHECK(a3tq.coeff(0, 0) == QPoly{1});
    CHECK(a3tq.coeff(5, 7).is_zero());
    CHECK(a3tq.specialize(BigInt{1}, std::nullopt, BigInt{1}).as_integer() == BigInt{6});

    CHECK((a2 - a2).is_zero());
    CHECK((a2 * TRQPoly{1}) == a2);
    TRQPoly prod = (t + r) * (t - r);
    CHECK(prod == t * t - r * r);
}

TEST_CASE("trqpoly canonical rendering") {
    CHECK(TRQPoly{}.str() == "0");
    CHECK(TRQPoly{5}.str() == "5");
    CHECK(TRQPoly::monomial(0, 1).str() == "r");
    CHECK(TRQPoly::monomial(2, 3).str() == "t^2*r^3");
    CHECK(TRQPoly::monomial(1, 0, QPoly::monomial(2)).str() == "q^2*t");
    CHECK(TRQPoly::monomial(1, 0, QPoly::monomial(1, BigInt{3})).str() == "3q*t");
    CHECK((TRQPoly{1} - TRQPoly::monomial(1, 0)).str() == "1 - t");
    CHECK((TRQPoly::monomial(1, 1) - TRQPoly{2}).str() == "-2 + t*r");
}
