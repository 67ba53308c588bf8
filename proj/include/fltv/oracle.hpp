#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

// Exact big-integer oracles. Everything here recomputes the modular
// pipeline's answers from first principles at small scale, with no shared
// code path beyond the exact polynomial constructors.

namespace fltv {

// Largest prime for which the exact oracles run; covers both epsilon
// classes and primes with nonempty suspicious sets.
inline constexpr std::uint64_t kOracleMaxPrime = 61;

/// Exact H_p(x,y) = ((x+y)^p - x^p - y^p) / (p x y (x+y) (x^2+xy+y^2)^epsilon).
/// Requires p prime in (3, 61], x, y nonzero, x+y != 0, gcd(x,y) = 1.
/// The division is checked; a remainder raises inexact_division.
mpz_class h_value_exact(std::uint64_t p, const mpz_class& x, const mpz_class& y);

/// True iff gcd(x+y, (x^n+y^n)/(x+y)) == gcd(x+y, n) for odd n and
/// coprime nonzero x, y with x+y != 0.
bool power_sum_gcd_check(const mpz_class& x, const mpz_class& y, std::uint64_t n);

struct NormFormCase {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t value = 0;                                 // x^2 + xy + y^2
    std::vector<std::pair<std::uint64_t, int>> factors;      // (prime, exponent)
};

/// Enumerates coprime 1 <= x <= y <= limit and factors x^2+xy+y^2 by trial
/// division. Every prime factor must be 3 or 1 (mod 6); a factor in class
/// 5 (mod 6) raises norm_form_violation.
std::vector<NormFormCase> norm_form_factor_scan(std::uint64_t limit);

/// For every X in [0, p^k): the modular Horner evaluation of H_p(X,1) must
/// match the exact-coefficient polynomial reduced mod p^k, and the closed
/// form must agree wherever its denominator is invertible.
bool crosscheck_modular(std::uint64_t p, int k);

/// H_p(1,1) * 3^epsilon * p == 2^(p-1) - 1, exactly.
bool fermat_quotient_relation_check(std::uint64_t p);

/// Largest v with p^v | n for exact integers; rejects n = 0.
long p_adic_valuation(const mpz_class& n, const mpz_class& p);

} // namespace fltv
