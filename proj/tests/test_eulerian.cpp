#include "doctest.h"

#include <cstdlib>

#include "qeulerian/eulerian.hpp"

using namespace qeulerian;

TEST_CASE("A_brute small values") {
    for (Triple tr : {Triple::MajExcFix, Triple::InvLecPix, Triple::AidDesRix}) {
        CHECK(A_brute(0, tr) == TRQPoly{1});
        CHECK(A_brute(1, tr).str() == "r");
        CHECK(A_brute(2, tr).str() == "r^2 + t");
    }
    CHECK(A_brute(3, Triple::MajExcFix).at_r1().str() == "1 + (2+q+q^2)*t + t^2");
}

TEST_CASE("A_brute rejects beyond the enumeration bound") {
    CHECK_THROWS_AS(A_brute(enumeration_bound() + 1, Triple::MajExcFix), std::invalid_argument);
}

TEST_CASE("recurrence agrees with brute enumeration under all triples") {
    CHECK(A_recurrence(1).str() == "r");
    CHECK(A_recurrence(2).str() == "r^2 + t");
    CHECK_THROWS_AS(A_recurrence(0), std::invalid_argument);
    for (int n = 1; n <= 7; ++n) {
        TRQPoly rec = A_recurrence(n);
        CHECK(rec == A_brute(n, Triple::MajExcFix));
        CHECK(rec == A_brute(n, Triple::InvLecPix));
        CHECK(rec == A_brute(n, Triple::AidDesRix));
    }
}

TEST_CASE("B_restricted: the three routes produce the same polynomial") {
    const TRQPoly b32 = B_restricted(3, 2, BRoute::ClosedForm);
    CHECK(b32.str() == "(q+q^2)*t");
    CHECK(B_restricted(3, 2, BRoute::Lemma41) == b32);
    CHECK(B_restricted(3, 2, BRoute::Lemma44) == b32);

    // n = j collapses to q^{j-1} A_{j-1}(t,q).
    for (int j = 1; j <= 5; ++j)
        CHECK(B_restricted(j, j, BRoute::Lemma44) ==
              A_tq(j - 1).times_q(QPoly::monomial(j - 1)));

    CHECK(B_restricted(3, 3, BRoute::Lemma44).str() == "q^2 + q^2*t");

    for (int n = 1; n <= 7; ++n)
        for (int j = 1; j <= n; ++j) {
            TRQPoly closed = B_restricted(n, j, BRoute::ClosedForm);
            CHECK(B_restricted(n, j, BRoute::Lemma44) == closed);
            if (j >= 2) CHECK(B_restricted(n, j, BRoute::Lemma41) == closed);
        }

    CHECK_THROWS_AS(B_restricted(3, 1, BRoute::Lemma41), std::invalid_argument);
    CHECK_THROWS_AS(B_restricted(3, 4, BRoute::Lemma44), std::invalid_argument);
}

TEST_CASE("B_restricted at q = 1 counts restricted descent classes") {
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            TRQPoly bj = B_restricted(n, j, BRoute::ClosedForm);
            for (int k = 0; k < n; ++k) {
                long long count = 0;
                for_each_permutation(n, [&](const Word& w) {
                    if (w[static_cast<std::size_t>(j) - 1] == n && des(w) == k) ++count;
                });
                CHECK(bj.coeff(k, 0).at_one() == BigInt{count});
            }
        }
}

TEST_CASE("B_trq values and the summation identity") {
    CHECK(B_trq(1, 1).str() == "r");
    CHECK(B_trq(3, 2).str() == "(q+q^2)*t*r");
    for (int n = 1; n <= 7; ++n) {
        TRQPoly sum;
        for (int j = 1; j <= n; ++j) sum += B_trq(n, j);
        CHECK(sum == A_brute(n, Triple::AidDesRix));
    }
}

TEST_CASE("B_trq satisfies the product recurrence at interior j") {
    // B_{n+1}^{(j)}(t,r,q) = t q^{n+1-j} [n j-1]_q B_{j-1}(t,1,q) B_{n+1-j}(t,r,q).
    for (int np1 = 3; np1 <= 6; ++np1)
        for (int j = 2; j < np1; ++j) {
            const int n = np1 - 1;
            TRQPoly lhs = B_trq(np1, j);
            TRQPoly bl = (j - 1 == 0) ? TRQPoly{1} : A_brute(j - 1, Triple::AidDesRix).at_r1();
            TRQPoly br = A_brute(np1 - j, Triple::AidDesRix);
            TRQPoly rhs = TRQPoly::monomial(1, 0) * bl * br;
            rhs = rhs.times_q(q_binomial(n, j - 1).shifted(np1 - j));
            CHECK(lhs == rhs);
        }

    // Boundary cases in j.
    for (int np1 = 2; np1 <= 6; ++np1) {
        TRQPoly bn_tq = (np1 == 1) ? TRQPoly{1} : A_brute(np1 - 1, Triple::AidDesRix).at_r1();
        CHECK(B_trq(np1, 1) == TRQPoly::monomial(1, 0) * bn_tq);
        CHECK(B_trq(np1, np1) ==
              TRQPoly::monomial(0, 1) * A_brute(np1 - 1, Triple::AidDesRix));
    }
}

TEST_CASE("derangement sums") {
    auto [l0, r0] = derangement_sum(0, 0);
    CHECK(l0 == QPoly{1});
    CHECK(r0 == QPoly{1});

    auto [l21, r21] = derangement_sum(2, 1);
    CHECK(l21 == QPoly{1});

    for (int n = 0; n <= 7; ++n)
        for (int a = 0; a <= n; ++a) {
            auto [lhs, rhs] = derangement_sum(n, a);
            CHECK(lhs == rhs);  // also asserted inside
        }
}

TEST_CASE("classic Eulerian polynomials") {
    CHECK(classic_eulerian(0) == TRQPoly{1});
    CHECK(classic_eulerian(3).str() == "1 + 4*t + t^2");
    for (int n = 0; n <= 8; ++n) {
        TRQPoly by_exc;
        for_each_permutation(n, [&](const Word& w) {
            int exc = 0;
            for (int i = 0; i < n; ++i)
                if (w[static_cast<std::size_t>(i)] > i + 1) ++exc;
            by_exc.add_term(exc, 0, QPoly{1});
        });
        CHECK(classic_eulerian(n) == by_exc);
        CHECK(classic_eulerian(n) ==
              A_brute(n, Triple::MajExcFix).specialize(std::nullopt, BigInt{1}, BigInt{1}));
    }
}

TEST_CASE("enumeration bound override via EULAB_MAX_N") {
    setenv("EULAB_MAX_N", "4", 1);
    CHECK(enumeration_bound() == 4);
    CHECK_THROWS_AS(A_brute(5, Triple::MajExcFix), std::invalid_argument);
    setenv("EULAB_MAX_N", "oops", 1);
    CHECK_THROWS_AS(enumeration_bound(), std::invalid_argument);
    unsetenv("EULAB_MAX_N");
    CHECK(enumeration_bound() == 9);
}
