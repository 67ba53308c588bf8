#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fltv/bigpoly.hpp"
#include "fltv/modmath.hpp"

// Polynomials attached to F_n(x,y) = (x+y)^n - x^n - y^n for odd n,
// specialized at y = 1:
//
//   F_n(x,1) = x(x+1) * sum_{i=1}^{(n-1)/2} W_{i-1} x^{i-1} (x+1)^{n-2i-1}
//   G_p(x,1) = F_p(x,1) / (p x (x+1))            integer coefficients, p > 3
//   H_p(x,1) = G_p(x,1) / (x^2+x+1)^epsilon
//
// epsilon is the multiplicity of x^2+xy+y^2 in G_p: 1 for p = -1 (mod 6),
// 2 for p = +1 (mod 6).

namespace fltv {

// Cap on exact big-integer constructions; keeps W tables and polynomial
// expansions at desk scale.
inline constexpr std::uint64_t kExactSizeLimit = 101;

struct PrimeCase {
    std::uint64_t p;
    int class6;  // +1 or -1, the residue of p mod 6
    int epsilon; // 1 iff class6 == -1

    static PrimeCase for_prime(std::uint64_t p);
};

/// Multiplicity of x^2+x+1 in G_p: 1 if p = 5 (mod 6), 2 if p = 1 (mod 6).
/// Rejects p <= 3 and non-primes.
int epsilon_for(std::uint64_t p);

struct WTable {
    std::uint64_t n = 0;
    std::vector<mpz_class> W;                     // W_0 .. W_{(n-3)/2}
    std::optional<std::vector<mpz_class>> w;      // W_j / n, present when n is prime

    const mpz_class& last() const { return W.back(); }
};

/// W coefficients of F_n in the mixed basis, by the quadratic recurrence
///   W_j = C(n,j+1) - sum_{k=1}^{j} [ (-1)^{j+k} C(n,k) + C(n-2j+2k-3, k) W_{j-k} ]
/// with C(a,b) = 0 when a < b or a < 0. Exact integers; n odd, 3 <= n <= limit.
WTable w_table(std::uint64_t n, std::uint64_t limit = kExactSizeLimit);

struct ModPoly {
    Modulus modulus;
    std::vector<std::uint64_t> coeffs; // index = degree, values in [0, modulus)
};

/// Coefficients of ((x+1)^p - x^p - 1)/p mod p^k, i.e. C(p,j)/p for
/// j = 1..p-1, by the multiplicative recurrence c_1 = 1,
/// c_j = c_{j-1} * (p-j+1) * j^{-1}. O(p) time; k in 1..3.
ModPoly binomial_quotient_coeffs(std::uint64_t p, int k);

/// G_p(x,1) mod p^k, degree p-3; k in {1,2}.
ModPoly g_coeffs_mod(std::uint64_t p, int k);

/// H_p(x,1) mod p^k, degree p-3-2*epsilon; k in {1,2}.
ModPoly h_coeffs_mod(std::uint64_t p, int k);

/// Horner evaluation of a ModPoly at x.
std::uint64_t eval_mod_poly(const ModPoly& poly, std::uint64_t x);

/// Exact G_p(x,1) via the binomial route: ((x+1)^p - x^p - 1)/(p x (x+1)).
BigPoly g_exact(std::uint64_t p, std::uint64_t limit = kExactSizeLimit);

/// Exact G_p(x,1) via the W table: sum w_{i-1} x^{i-1} (x+1)^{p-2i-1}.
/// Independent of the binomial route; the two must agree.
BigPoly g_exact_from_w_table(std::uint64_t p, std::uint64_t limit = kExactSizeLimit);

/// Exact H_p(x,1) = G_p(x,1) / (x^2+x+1)^epsilon.
BigPoly h_exact(std::uint64_t p, std::uint64_t limit = kExactSizeLimit);

/// True iff (x+1)^n - x^n - 1 equals x(x+1) * sum_i W_{i-1} x^{i-1} (x+1)^{n-2i-1}
/// as exact polynomials. n odd, 3 <= n <= limit.
bool verify_w_basis_identity(std::uint64_t n, std::uint64_t limit = kExactSizeLimit);

/// True iff (x^2+x+1)^epsilon divides G_p(x,1) exactly over the integers
/// and (x^2+x+1)^(epsilon+1) does not. Exact arithmetic; p <= limit.
bool epsilon_multiplicity_check(std::uint64_t p, std::uint64_t limit = 199);

} // namespace fltv
