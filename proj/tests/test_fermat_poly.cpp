#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include <cstdint>
#include <vector>

#include "fltv/errors.hpp"
#include "fltv/fermat_poly.hpp"
#include "fltv/modmath.hpp"

using namespace fltv;

namespace {

std::vector<mpz_class> mpz_vec(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("epsilon follows the residue of p mod 6") {
    CHECK(epsilon_for(5) == 1);
    CHECK(epsilon_for(7) == 2);
    CHECK(epsilon_for(11) == 1);
    CHECK(epsilon_for(13) == 2);
    CHECK(epsilon_for(1093) == 2);  // 1093 = 6*182 + 1
    CHECK_THROWS_AS(epsilon_for(3), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_for(9), std::invalid_argument);

    const auto c5 = PrimeCase::for_prime(5);
    CHECK(c5.class6 == -1);
    CHECK(c5.epsilon == 1);
    const auto c7 = PrimeCase::for_prime(7);
    CHECK(c7.class6 == 1);
    CHECK(c7.epsilon == 2);
}

TEST_CASE("W tables for small odd n") {
    CHECK(w_table(3).W == mpz_vec({3}));
    CHECK(w_table(5).W == mpz_vec({5, -5}));
    CHECK(w_table(7).W == mpz_vec({7, -14, 7}));
    CHECK(w_table(9).W == mpz_vec({9, -27, 30, -9}));

    const auto t5 = w_table(5);
    REQUIRE(t5.w.has_value());
    CHECK(*t5.w == mpz_vec({1, -1}));
    CHECK(!w_table(9).w.has_value()); // 9 is not prime

    CHECK_THROWS_AS(w_table(4), std::invalid_argument);
    CHECK_THROWS_AS(w_table(1), std::invalid_argument);
    CHECK_THROWS_AS(w_table(103), std::invalid_argument); // above the exact cap
}

TEST_CASE("W endpoints and mixed-basis identity, odd n <= 25") {
    for (std::uint64_t n = 3; n <= 25; n += 2) {
        const auto table = w_table(n);
        CHECK(table.W.size() == (n - 1) / 2);
        CHECK(table.W.front() == static_cast<unsigned long>(n));
        mpz_class endpoint(static_cast<unsigned long>(n));
        if (((n - 3) / 2) % 2 != 0)
            endpoint = -endpoint;
        CHECK(table.last() == endpoint);
        CHECK(verify_w_basis_identity(n));
    }
}

TEST_CASE("every W_j of a prime table is divisible by the prime") {
    for (std::uint64_t p = 5; p <= 61; p += 2) {
        if (!is_prime(p))
            continue;
        const auto table = w_table(p);
        for (const auto& W : table.W)
            CHECK(mpz_divisible_ui_p(W.get_mpz_t(), static_cast<unsigned long>(p)));
        REQUIRE(table.w.has_value());
        CHECK((*table.w)[0] == 1); // w_0 = 1
    }
}

TEST_CASE("binomial quotient column equals exact C(p,j)/p") {
    // dense, index = degree: the constant term of ((x+1)^p - x^p - 1)/p is 0
    const auto col = binomial_quotient_coeffs(13, 2);
    CHECK(col.modulus.value() == 169);
    CHECK(col.coeffs ==
          std::vector<std::uint64_t>{0, 1, 6, 22, 55, 99, 132, 132, 99, 55, 22, 6, 1});

    // k = 3 stays within the modulus cap for p = 13
    const auto col3 = binomial_quotient_coeffs(13, 3);
    CHECK(col3.modulus.value() == 2197);
    for (std::size_t j = 0; j < col.coeffs.size(); ++j)
        CHECK(col3.coeffs[j] % 169 == col.coeffs[j]);

    CHECK_THROWS_AS(binomial_quotient_coeffs(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(binomial_quotient_coeffs(13, 4), std::invalid_argument);
}

TEST_CASE("G_5 is the norm form and H_5 = H_7 = 1") {
    CHECK(g_coeffs_mod(5, 1).coeffs == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(g_coeffs_mod(5, 2).coeffs == std::vector<std::uint64_t>{1, 1, 1});
    for (int k = 1; k <= 2; ++k) {
        CHECK(h_coeffs_mod(5, k).coeffs == std::vector<std::uint64_t>{1});
        CHECK(h_coeffs_mod(7, k).coeffs == std::vector<std::uint64_t>{1});
    }
    CHECK(g_exact(5).coeffs() == mpz_vec({1, 1, 1}));
    CHECK(h_exact(5).coeffs() == mpz_vec({1}));
    CHECK(h_exact(7).coeffs() == mpz_vec({1}));
}

TEST_CASE("exact H vectors for the first interesting primes") {
    CHECK(h_exact(11).coeffs() == mpz_vec({1, 3, 7, 9, 7, 3, 1}));
    CHECK(h_exact(13).coeffs() == mpz_vec({1, 3, 8, 11, 8, 3, 1}));
}

TEST_CASE("modular and exact coefficient pipelines agree") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 31ULL, 61ULL, 101ULL}) {
        CHECK(g_exact(p) == g_exact_from_w_table(p));
        for (int k = 1; k <= 2; ++k) {
            const Modulus m(k == 1 ? p : p * p);
            CHECK(g_exact(p).reduced(m) == g_coeffs_mod(p, k).coeffs);
            CHECK(h_exact(p).reduced(m) == h_coeffs_mod(p, k).coeffs);
        }
    }
}

TEST_CASE("structure of the modular coefficient vectors") {
    for (std::uint64_t p = 5; p <= 101; p += 2) {
        if (!is_prime(p))
            continue;
        const int eps = epsilon_for(p);
        for (int k = 1; k <= 2; ++k) {
            const auto g = g_coeffs_mod(p, k);
            const auto h = h_coeffs_mod(p, k);
            CHECK(g.coeffs.size() == p - 2);               // degree p-3
            CHECK(h.coeffs.size() == p - 2 - 2 * eps);     // degree p-3-2eps
            CHECK(g.coeffs.front() == 1);
            CHECK(h.coeffs.front() == 1);
            // palindromes: H_p(x,y) is symmetric and homogeneous
            for (std::size_t i = 0; i < h.coeffs.size(); ++i)
                CHECK(h.coeffs[i] == h.coeffs[h.coeffs.size() - 1 - i]);
        }
        const auto g1 = g_coeffs_mod(p, 1);
        const auto g2 = g_coeffs_mod(p, 2);
        for (std::size_t i = 0; i < g1.coeffs.size(); ++i)
            CHECK(g2.coeffs[i] % p == g1.coeffs[i]);
    }
}

TEST_CASE("norm form multiplicity in G_p is exactly epsilon") {
    for (std::uint64_t p = 5; p <= 61; p += 2)
        if (is_prime(p))
            CHECK(epsilon_multiplicity_check(p));
}

TEST_CASE("mod-poly evaluation at fixed points") {
    CHECK(eval_mod_poly(h_coeffs_mod(11, 1), 4) == 3);
    CHECK(eval_mod_poly(h_coeffs_mod(13, 1), 3) == 2); // X=3 is a root of x^2+x+1 mod 13
    CHECK(eval_mod_poly(h_coeffs_mod(11, 1), 0) == 1);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(g_coeffs_mod(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(g_coeffs_mod(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_coeffs_mod(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(g_exact(103), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_multiplicity_check(4), std::invalid_argument);
}
