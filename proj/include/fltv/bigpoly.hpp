#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fltv/modmath.hpp"

namespace fltv {

// Dense univariate polynomial with exact integer coefficients,
// coeffs[i] = coefficient of x^i. The zero polynomial is the empty
// vector; otherwise the leading coefficient is nonzero.
class BigPoly {
public:
    BigPoly() = default;
    explicit BigPoly(std::vector<mpz_class> coeffs);

    /// (x+1)^m expanded via binomial coefficients.
    static BigPoly binomial_power(unsigned long m);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    /// this += s * x^shift * q
    void add_scaled_shifted(const BigPoly& q, const mpz_class& s, std::size_t shift);

    BigPoly operator-(const BigPoly& rhs) const;
    bool operator==(const BigPoly& rhs) const = default;

    /// Quotient and remainder by a monic divisor (synthetic division).
    std::pair<BigPoly, BigPoly> divrem_monic(const BigPoly& divisor) const;

    /// Exact division by a monic divisor; throws inexact_division if a
    /// remainder is left.
    BigPoly div_exact_monic(const BigPoly& divisor) const;

    /// Quotient by x^k; throws inexact_division unless the low k
    /// coefficients are zero.
    BigPoly div_exact_x_power(std::size_t k) const;

    mpz_class eval(const mpz_class& x) const;

    /// Coefficients reduced to canonical residues mod m.
    std::vector<std::uint64_t> reduced(Modulus m) const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

} // namespace fltv
