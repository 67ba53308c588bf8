#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include <cstdint>
#include <numeric>
#include <random>

#include "fltv/errors.hpp"
#include "fltv/modmath.hpp"
#include "fltv/oracle.hpp"

using namespace fltv;

TEST_CASE("H_5 is identically 1") {
    CHECK(h_value_exact(5, 1, 1) == 1);
    CHECK(h_value_exact(5, 2, 3) == 1);
    CHECK(h_value_exact(5, -4, 7) == 1);
    CHECK(h_value_exact(5, 1000001, 999999) == 1);
}

TEST_CASE("fixed exact H values") {
    CHECK(h_value_exact(11, 1, 1) == 31); // (2^10 - 1) / (11 * 3)
    CHECK(h_value_exact(13, 2, 3) == 8659);
}

TEST_CASE("H is symmetric in x and y") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(1, 500);
    for (int i = 0; i < 50; ++i) {
        mpz_class x(coord(rng)), y(coord(rng));
        if (gcd(x, y) != 1)
            continue;
        for (std::uint64_t p : {7ULL, 11ULL, 13ULL})
            CHECK(h_value_exact(p, x, y) == h_value_exact(p, y, x));
    }
}

TEST_CASE("h_value_exact rejects invalid input") {
    CHECK_THROWS_AS(h_value_exact(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_value_exact(67, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_value_exact(9, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_value_exact(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_value_exact(5, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(h_value_exact(5, 2, 2), std::invalid_argument);
}

TEST_CASE("power-sum gcd identity on fixed and random triples") {
    CHECK(power_sum_gcd_check(1, 2, 3));  // gcd(3, 9/3) = 3 = gcd(3, 3)
    CHECK(power_sum_gcd_check(2, 3, 9));  // gcd(5, 4039) = 1 = gcd(5, 9)
    CHECK(power_sum_gcd_check(1, 1, 99));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coord(1, 100000);
    std::uniform_int_distribution<std::uint64_t> half(0, 49);
    int done = 0;
    while (done < 500) {
        mpz_class x(coord(rng)), y(coord(rng));
        if (rng() % 4 == 0)
            y = -y;
        if (x + y == 0 || gcd(x, y) != 1)
            continue;
        CHECK(power_sum_gcd_check(x, y, 2 * half(rng) + 1));
        ++done;
    }

    CHECK_THROWS_AS(power_sum_gcd_check(1, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(power_sum_gcd_check(1, -1, 3), std::invalid_argument);
}

TEST_CASE("norm form factors avoid the 5 mod 6 class") {
    const auto cases = norm_form_factor_scan(50);

    std::size_t coprime_pairs = 0;
    for (std::uint64_t y = 1; y <= 50; ++y)
        for (std::uint64_t x = 1; x <= y; ++x)
            coprime_pairs += std::gcd(x, y) == 1;
    CHECK(cases.size() == coprime_pairs);

    for (const auto& c : cases) {
        CHECK(c.value == c.x * c.x + c.x * c.y + c.y * c.y);
        std::uint64_t rebuilt = 1;
        for (const auto& [q, e] : c.factors) {
            CHECK((q == 3 || q % 6 == 1));
            for (int i = 0; i < e; ++i)
                rebuilt *= q;
        }
        CHECK(rebuilt == c.value);
    }

    // the first case is x = y = 1: f = 3
    CHECK(cases.front().value == 3);
    REQUIRE(cases.front().factors.size() == 1);
    CHECK(cases.front().factors.front() == std::pair<std::uint64_t, int>{3, 1});
}

TEST_CASE("modular pipeline matches the exact polynomial everywhere") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 31ULL, 61ULL})
        for (int k = 1; k <= 2; ++k)
            CHECK(crosscheck_modular(p, k));
    CHECK_THROWS_AS(crosscheck_modular(67, 1), std::invalid_argument);
    CHECK_THROWS_AS(crosscheck_modular(11, 3), std::invalid_argument);
}

TEST_CASE("H_p(1,1) recovers the Fermat quotient of 2") {
    for (std::uint64_t p : primes_in_range(5, kOracleMaxPrime).primes)
        CHECK(fermat_quotient_relation_check(p));
}

TEST_CASE("p-adic valuation on big integers") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 1092);
    big -= 1;
    CHECK(p_adic_valuation(big, 1093) == 2);

    mpz_class big2;
    mpz_ui_pow_ui(big2.get_mpz_t(), 2, 3510);
    big2 -= 1;
    CHECK(p_adic_valuation(big2, 3511) == 2);

    CHECK(p_adic_valuation(mpz_class(12), 2) == 2);
    CHECK(p_adic_valuation(mpz_class(-12), 2) == 2);
    CHECK_THROWS_AS(p_adic_valuation(mpz_class(0), 2), std::invalid_argument);
}
