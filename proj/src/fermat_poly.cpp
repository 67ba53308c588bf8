#include "fltv/fermat_poly.hpp"

#include "fltv/errors.hpp"

namespace fltv {

namespace {

void require_prime_gt3(std::uint64_t p, const char* who) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p must be a prime > 3");
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// Binomial with the convention C(a,b) = 0 for a < b or a < 0, which is
// what makes the W recurrence produce W_0 = n and the endpoint value.
mpz_class binom(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || a < b)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// In-place synthetic division of a degree-indexed residue vector by a monic
// divisor, mod m. Returns the quotient; throws if a remainder survives.
std::vector<std::uint64_t> div_exact_monic_mod(std::vector<std::uint64_t> num,
                                               const std::vector<std::uint64_t>& divisor,
                                               Modulus m) {
    const std::size_t d = divisor.size() - 1;
    if (num.size() < divisor.size())
        throw inexact_division("div_exact_monic_mod: degree too small");
    std::vector<std::uint64_t> quot(num.size() - d);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const std::uint64_t q = num[d + k];
        quot[k] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            num[k + j] = sub_mod(num[k + j], mul_mod(q, divisor[j], m), m);
        num[d + k] = 0;
    }
    for (std::size_t j = 0; j < d; ++j)
        if (num[j] != 0)
            throw inexact_division("div_exact_monic_mod: nonzero remainder");
    return quot;
}

} // namespace

PrimeCase PrimeCase::for_prime(std::uint64_t p) {
    require_prime_gt3(p, "PrimeCase");
    const int cls = (p % 6 == 1) ? +1 : -1;
    return PrimeCase{p, cls, cls == 1 ? 2 : 1};
}

int epsilon_for(std::uint64_t p) {
    return PrimeCase::for_prime(p).epsilon;
}

WTable w_table(std::uint64_t n, std::uint64_t limit) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("w_table: n must be odd and >= 3");
    if (n > limit)
        throw std::invalid_argument("w_table: n exceeds the exact-arithmetic limit");

    WTable t;
    t.n = n;
    const std::size_t count = (n - 3) / 2 + 1;
    t.W.reserve(count);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t j = 0; j < count; ++j) {
        mpz_class wj = binom(sn, static_cast<std::int64_t>(j) + 1);
        for (std::size_t k = 1; k <= j; ++k) {
            const int sign = ((j + k) % 2 == 0) ? +1 : -1;
            wj -= sign * binom(sn, static_cast<std::int64_t>(k));
            wj -= binom(sn - 2 * static_cast<std::int64_t>(j) + 2 * static_cast<std::int64_t>(k) - 3,
                        static_cast<std::int64_t>(k)) *
                  t.W[j - k];
        }
        t.W.push_back(std::move(wj));
    }

    if (n > 3 && is_prime(n)) {
        std::vector<mpz_class> w(count);
        for (std::size_t j = 0; j < count; ++j) {
            if (!mpz_divisible_ui_p(t.W[j].get_mpz_t(), static_cast<unsigned long>(n)))
                throw inexact_division("w_table: W_j not divisible by prime n");
            mpz_divexact_ui(w[j].get_mpz_t(), t.W[j].get_mpz_t(), static_cast<unsigned long>(n));
        }
        t.w = std::move(w);
    }
    return t;
}

ModPoly binomial_quotient_coeffs(std::uint64_t p, int k) {
    require_prime_gt3(p, "binomial_quotient_coeffs");
    if (k < 1 || k > 3)
        throw std::invalid_argument("binomial_quotient_coeffs: k must be in 1..3");

    const Modulus m(pow_u64(p, k));
    ModPoly poly{m, std::vector<std::uint64_t>(p)};
    std::uint64_t c = 1; // C(p,1)/p
    poly.coeffs[1] = c;
    for (std::uint64_t j = 2; j <= p - 1; ++j) {
        // gcd(j, p^k) = 1 since j < p
        c = mul_mod(c, (p - j + 1) % m.value(), m);
        c = mul_mod(c, *inv_mod(j, m), m);
        poly.coeffs[j] = c;
    }
    return poly;
}

ModPoly g_coeffs_mod(std::uint64_t p, int k) {
    require_prime_gt3(p, "g_coeffs_mod");
    if (k != 1 && k != 2)
        throw std::invalid_argument("g_coeffs_mod: k must be 1 or 2");

    ModPoly fp = binomial_quotient_coeffs(p, k);
    if (fp.coeffs[0] != 0)
        throw inexact_division("g_coeffs_mod: nonzero constant term");
    fp.coeffs.erase(fp.coeffs.begin()); // divide by x
    return ModPoly{fp.modulus, div_exact_monic_mod(std::move(fp.coeffs), {1, 1}, fp.modulus)};
}

ModPoly h_coeffs_mod(std::uint64_t p, int k) {
    ModPoly g = g_coeffs_mod(p, k);
    const int eps = epsilon_for(p);
    std::vector<std::uint64_t> c = std::move(g.coeffs);
    for (int i = 0; i < eps; ++i)
        c = div_exact_monic_mod(std::move(c), {1, 1, 1}, g.modulus);
    return ModPoly{g.modulus, std::move(c)};
}

std::uint64_t eval_mod_poly(const ModPoly& poly, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.coeffs.size(); i-- > 0;)
        acc = add_mod(mul_mod(acc, x, poly.modulus), poly.coeffs[i], poly.modulus);
    return acc;
}

BigPoly g_exact(std::uint64_t p, std::uint64_t limit) {
    require_prime_gt3(p, "g_exact");
    if (p > limit)
        throw std::invalid_argument("g_exact: p exceeds the exact-arithmetic limit");

    // ((x+1)^p - x^p - 1)/p has coefficients C(p,j)/p for j = 1..p-1.
    std::vector<mpz_class> c(p);
    for (std::uint64_t j = 1; j <= p - 1; ++j) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(j));
        mpz_divexact_ui(c[j].get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
    }
    BigPoly f_over_p{std::move(c)};
    return f_over_p.div_exact_x_power(1).div_exact_monic(BigPoly{{1, 1}});
}

BigPoly g_exact_from_w_table(std::uint64_t p, std::uint64_t limit) {
    require_prime_gt3(p, "g_exact_from_w_table");
    const WTable t = w_table(p, limit);
    BigPoly g;
    for (std::uint64_t i = 1; i <= (p - 1) / 2; ++i)
        g.add_scaled_shifted(BigPoly::binomial_power(static_cast<unsigned long>(p - 2 * i - 1)),
                             (*t.w)[i - 1], i - 1);
    return g;
}

BigPoly h_exact(std::uint64_t p, std::uint64_t limit) {
    BigPoly g = g_exact(p, limit);
    const BigPoly f{{1, 1, 1}};
    const int eps = epsilon_for(p);
    for (int i = 0; i < eps; ++i)
        g = g.div_exact_monic(f);
    return g;
}

bool verify_w_basis_identity(std::uint64_t n, std::uint64_t limit) {
    const WTable t = w_table(n, limit); // validates n
    // lhs = (x+1)^n - x^n - 1
    BigPoly lhs = BigPoly::binomial_power(static_cast<unsigned long>(n));
    std::vector<mpz_class> sub(n + 1);
    sub[0] = 1;
    sub[n] = 1;
    lhs = lhs - BigPoly{std::move(sub)};

    // rhs = x(x+1) * sum_i W_{i-1} x^{i-1} (x+1)^{n-2i-1}
    BigPoly sum;
    for (std::uint64_t i = 1; i <= (n - 1) / 2; ++i)
        sum.add_scaled_shifted(BigPoly::binomial_power(static_cast<unsigned long>(n - 2 * i - 1)),
                               t.W[i - 1], i - 1);
    BigPoly rhs;
    rhs.add_scaled_shifted(sum, 1, 1); // x * sum
    rhs.add_scaled_shifted(sum, 1, 2); // + x^2 * sum
    return lhs == rhs;
}

bool epsilon_multiplicity_check(std::uint64_t p, std::uint64_t limit) {
    BigPoly g = g_exact(p, limit);
    const BigPoly f{{1, 1, 1}};
    const int eps = epsilon_for(p);
    for (int i = 0; i < eps; ++i) {
        auto [q, r] = g.divrem_monic(f);
        if (!r.is_zero())
            return false;
        g = std::move(q);
    }
    auto [q, r] = g.divrem_monic(f);
    (void)q;
    return !r.is_zero();
}

} // namespace fltv
