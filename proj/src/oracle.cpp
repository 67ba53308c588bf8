#include "fltv/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "fltv/bigpoly.hpp"
#include "fltv/errors.hpp"
#include "fltv/fermat_poly.hpp"
#include "fltv/modmath.hpp"
#include "fltv/verifier.hpp"

namespace fltv {

namespace {

void require_oracle_prime(std::uint64_t p) {
    if (p <= 3 || p > kOracleMaxPrime || !is_prime(p))
        throw std::invalid_argument("oracle prime must lie in (3, " +
                                    std::to_string(kOracleMaxPrime) + "]: " +
                                    std::to_string(p));
}

mpz_class pow_ui(const mpz_class& base, std::uint64_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::vector<std::pair<std::uint64_t, int>> trial_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q != 0)
            continue;
        int e = 0;
        do {
            n /= q;
            ++e;
        } while (n % q == 0);
        out.emplace_back(q, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

} // namespace

mpz_class h_value_exact(std::uint64_t p, const mpz_class& x, const mpz_class& y) {
    require_oracle_prime(p);
    const mpz_class s = x + y;
    if (x == 0 || y == 0 || s == 0)
        throw std::invalid_argument("h_value_exact requires x, y, x+y nonzero");
    if (gcd(x, y) != 1)
        throw std::invalid_argument("h_value_exact requires gcd(x, y) = 1");

    const mpz_class num = pow_ui(s, p) - pow_ui(x, p) - pow_ui(y, p);
    mpz_class den = mpz_class(static_cast<unsigned long>(p)) * x * y * s;
    const mpz_class f = x * x + x * y + y * y;
    for (int i = 0; i < epsilon_for(p); ++i)
        den *= f;

    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw inexact_division("H_" + std::to_string(p) + " numerator not divisible at (" +
                               x.get_str() + ", " + y.get_str() + ")");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

bool power_sum_gcd_check(const mpz_class& x, const mpz_class& y, std::uint64_t n) {
    if (n % 2 == 0 || n == 0)
        throw std::invalid_argument("power_sum_gcd_check requires odd n");
    const mpz_class s = x + y;
    if (x == 0 || y == 0 || s == 0)
        throw std::invalid_argument("power_sum_gcd_check requires x, y, x+y nonzero");
    if (gcd(x, y) != 1)
        throw std::invalid_argument("power_sum_gcd_check requires gcd(x, y) = 1");

    const mpz_class num = pow_ui(x, n) + pow_ui(y, n);
    if (!mpz_divisible_p(num.get_mpz_t(), s.get_mpz_t()))
        throw inexact_division("x+y does not divide x^n + y^n");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), s.get_mpz_t());

    return gcd(s, q) == gcd(s, mpz_class(static_cast<unsigned long>(n)));
}

std::vector<NormFormCase> norm_form_factor_scan(std::uint64_t limit) {
    std::vector<NormFormCase> out;
    for (std::uint64_t y = 1; y <= limit; ++y) {
        for (std::uint64_t x = 1; x <= y; ++x) {
            if (std::gcd(x, y) != 1)
                continue;
            NormFormCase c;
            c.x = x;
            c.y = y;
            c.value = x * x + x * y + y * y;
            c.factors = trial_factor(c.value);
            for (const auto& [q, e] : c.factors) {
                if (q % 6 == 5)
                    throw norm_form_violation(
                        "x^2+xy+y^2 has a factor 5 (mod 6): x=" + std::to_string(x) +
                        " y=" + std::to_string(y) + " q=" + std::to_string(q));
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool crosscheck_modular(std::uint64_t p, int k) {
    require_oracle_prime(p);
    if (k < 1 || k > 2)
        throw std::invalid_argument("crosscheck_modular supports k in {1, 2}");

    std::uint64_t pk = p;
    for (int i = 1; i < k; ++i)
        pk *= p;
    const Modulus m(pk);
    const mpz_class mz(static_cast<unsigned long>(pk));

    const BigPoly h = h_exact(p);
    const ModPoly hmod = h_coeffs_mod(p, k);
    if (h.reduced(m) != hmod.coeffs)
        return false;

    for (std::uint64_t X = 0; X < pk; ++X) {
        mpz_class exact = h.eval(mpz_class(static_cast<unsigned long>(X)));
        mpz_mod(exact.get_mpz_t(), exact.get_mpz_t(), mz.get_mpz_t());
        const std::uint64_t want = exact.get_ui();

        if (eval_h_horner(p, X, k) != want)
            return false;
        if (const auto direct = eval_h_direct(p, X, k); direct && *direct != want)
            return false;
    }
    return true;
}

bool fermat_quotient_relation_check(std::uint64_t p) {
    require_oracle_prime(p);
    mpz_class lhs = h_value_exact(p, 1, 1);
    for (int i = 0; i < epsilon_for(p); ++i)
        lhs *= 3;
    lhs *= static_cast<unsigned long>(p);
    return lhs == pow_ui(2, p - 1) - 1;
}

long p_adic_valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0)
        throw std::invalid_argument("p_adic_valuation of zero");
    if (p < 2)
        throw std::invalid_argument("p_adic_valuation base must be >= 2");
    mpz_class rem;
    return static_cast<long>(
        mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

} // namespace fltv
