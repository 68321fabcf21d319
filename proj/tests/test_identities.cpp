#include "doctest.h"

#include "json.hpp"
#include "qeulerian/identities.hpp"

using namespace qeulerian;

TEST_CASE("th16: hand-expanded case and sweeps") {
    VerifyReport r = verify_th16(1, 2);
    CHECK(r.pass);
    CHECK(r.lhs == "3+2q+2q^2");
    CHECK(r.rhs == "3+2q+2q^2");

    CHECK(verify_th16(2, 2).pass);

    for (int a = 1; a <= 7; ++a)
        for (int b = 1; a + b <= 8; ++b) {
            CHECK(verify_th16(a, b).pass);
            if (a + b <= 6) CHECK(verify_th16(a, b, VerifyRoute::Brute).pass);
        }
    CHECK_THROWS_AS(verify_th16(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_th16(5, 99), std::invalid_argument);
}

TEST_CASE("th17 sweeps") {
    CHECK(verify_th17(3, 3).pass);
    CHECK(verify_th17(1, 2).pass);
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; a + b <= 8; ++b) CHECK(verify_th17(a, b).pass);
}

TEST_CASE("th17 agrees with the derangement strata, bijectively complemented") {
    // Each side of the alternating identity is (-1)^n times the stratum
    // polynomial of the pix-free permutations, and the hook-complementation
    // involution carries stratum a onto stratum b.
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 7; ++b) {
            const int n = a + b;
            auto [sa, ra] = derangement_sum(n, a);
            auto [sb, rb] = derangement_sum(n, b);
            CHECK(sa == sb);

            QPoly transported;
            long long moved = 0;
            for_each_permutation(n, [&](const Word& w) {
                auto f = detail::factorize_word(w);
                if (f.pix() != 0 || f.lec() != a) return;
                Permutation u = sympix_involution(Permutation{w});
                auto fu = hook_factorize(u);
                REQUIRE(fu.pix() == 0);
                REQUIRE(fu.lec() == b);
                transported += QPoly::monomial(inv(u.letters()) - fu.lec());
                ++moved;
            });
            CHECK(transported == sb);

            VerifyReport rep = verify_th17(a, b);
            CHECK(rep.pass);
        }
}

TEST_CASE("syfix sweeps") {
    CHECK(verify_syfix(2, 2, 1).pass);
    CHECK(verify_syfix(1, 2, 0).pass);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int j = 0; a + b + j + 1 <= 8; ++j) CHECK(verify_syfix(a, b, j).pass);
}

TEST_CASE("main1 sweeps and the j = 1 rejection") {
    CHECK(verify_main1(1, 2, 2).pass);
    CHECK(verify_main1(3, 3, 4).pass);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b + 2 <= 8; ++b)
            for (int j = 2; j <= 6; ++j) CHECK(verify_main1(a, b, j).pass);
    CHECK_THROWS_AS(verify_main1(1, 1, 1), std::invalid_argument);
}

TEST_CASE("pixve reports") {
    CHECK(verify_pixve(0, 0).pass);
    CHECK(verify_pixve(2, 1).lhs == "1");
    for (int n = 0; n <= 7; ++n)
        for (int a = 0; a <= n; ++a) CHECK(verify_pixve(n, a).pass);
}

TEST_CASE("coefficient symmetries with involution transport") {
    for (int n = 1; n <= 8; ++n) {
        auto reps = verify_symmetries(n);
        for (const auto& r : reps) CHECK(r.pass);
    }
    // Out-of-range coefficients vanish on both sides.
    CHECK(A_num_fix(3, 7, 0).is_zero());
    CHECK(A_num_fix(3, -4, 0).is_zero());
}

TEST_CASE("equidistribution of the three triples") {
    VerifyReport r1 = verify_equidistribution(1);
    CHECK(r1.pass);
    CHECK(r1.lhs == "r");
    for (int n = 1; n <= 8; ++n) CHECK(verify_equidistribution(n).pass);
}

TEST_CASE("lemma24 counting identity") {
    for (int n = 1; n <= 7; ++n)
        for (int j = 0; j <= n; ++j)
            for (int a = 0; a <= n - j; ++a) CHECK(verify_lemma24(n, j, a).pass);
}

TEST_CASE("lemma46 counting identity") {
    for (int n = 1; n <= 7; ++n)
        for (int j = 1; j <= n; ++j)
            for (int a = 0; a <= n; ++a) CHECK(verify_lemma46(n, j, a).pass);
}

TEST_CASE("syfix and main1 agree with their bijective routes stratum by stratum") {
    // syfix: both sides equal the two-pix stratum polynomial, and the
    // stratum complementation is the lemma's involution.
    for (int j = 0; j <= 2; ++j)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; a + b + j + 1 <= 6; ++b) {
                const int n = a + b + j + 1;
                QPoly sa = twopix_stratum(n, j, a);
                QPoly sb = twopix_stratum(n, j, b);
                CHECK(sa == sb);
                QPoly rhs_a;
                for (int k = 0; k <= n; ++k)
                    rhs_a += q_binomial(n, k) * A_num_fix(k, a, j);
                CHECK(sa == rhs_a);
                CHECK(verify_syfix(a, b, j).pass);
            }

    // main1: same story through the j-restricted objects.
    for (int j = 2; j <= 3; ++j)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; a + b + 2 <= 6; ++b) {
                const int n = a + b + 2;
                QPoly sa = jres_stratum(n, j, a);
                QPoly sb = jres_stratum(n, j, b);
                CHECK(sa == sb);
                QPoly rhs_a;
                for (int k = 1; k <= n; ++k)
                    rhs_a += q_binomial(n - 1, k - 1) * B_num(k, a, j);
                CHECK(sa == rhs_a);
                CHECK(verify_main1(a, b, j).pass);
            }
}

TEST_CASE("verify reports serialize to schema-conformant JSON") {
    VerifyReport rep = verify_th16(1, 2);
    auto doc = nlohmann::json::parse(rep.json());
    CHECK(doc.at("identity") == "th16");
    CHECK(doc.at("params").at("a") == 1);
    CHECK(doc.at("params").at("b") == 2);
    CHECK(doc.at("lhs").is_string());
    CHECK(doc.at("rhs").is_string());
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("witness").is_null());

    // A failing comparison carries a witness string.
    VerifyReport fake = detail::qpoly_report("demo", {{"x", 1}}, QPoly{1}, QPoly::monomial(2));
    CHECK_FALSE(fake.pass);
    auto doc2 = nlohmann::json::parse(fake.json());
    CHECK(doc2.at("witness").is_string());
}
