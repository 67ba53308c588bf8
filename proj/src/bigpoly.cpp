#include "fltv/bigpoly.hpp"

#include "fltv/errors.hpp"

namespace fltv {

BigPoly::BigPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void BigPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigPoly BigPoly::binomial_power(unsigned long m) {
    std::vector<mpz_class> c(m + 1);
    for (unsigned long j = 0; j <= m; ++j)
        mpz_bin_uiui(c[j].get_mpz_t(), m, j);
    return BigPoly(std::move(c));
}

void BigPoly::add_scaled_shifted(const BigPoly& q, const mpz_class& s, std::size_t shift) {
    if (q.is_zero() || s == 0)
        return;
    if (c_.size() < q.c_.size() + shift)
        c_.resize(q.c_.size() + shift);
    for (std::size_t i = 0; i < q.c_.size(); ++i)
        c_[i + shift] += s * q.c_[i];
    trim();
}

BigPoly BigPoly::operator-(const BigPoly& rhs) const {
    std::vector<mpz_class> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i] = c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c[i] -= rhs.c_[i];
    return BigPoly(std::move(c));
}

std::pair<BigPoly, BigPoly> BigPoly::divrem_monic(const BigPoly& divisor) const {
    if (divisor.is_zero() || divisor.c_.back() != 1)
        throw std::invalid_argument("divrem_monic: divisor must be monic");
    const std::size_t d = divisor.c_.size() - 1;
    if (c_.size() < divisor.c_.size())
        return {BigPoly{}, *this};

    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quot(c_.size() - d);
    for (std::size_t k = quot.size(); k-- > 0;) {
        quot[k] = rem[d + k];
        if (quot[k] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            rem[k + j] -= quot[k] * divisor.c_[j];
        rem[d + k] = 0;
    }
    rem.resize(d);
    return {BigPoly(std::move(quot)), BigPoly(std::move(rem))};
}

BigPoly BigPoly::div_exact_monic(const BigPoly& divisor) const {
    auto [q, r] = divrem_monic(divisor);
    if (!r.is_zero())
        throw inexact_division("div_exact_monic: nonzero remainder");
    return q;
}

BigPoly BigPoly::div_exact_x_power(std::size_t k) const {
    if (c_.size() < k)
        throw inexact_division("div_exact_x_power: degree too small");
    for (std::size_t i = 0; i < k; ++i)
        if (c_[i] != 0)
            throw inexact_division("div_exact_x_power: nonzero low coefficient");
    return BigPoly(std::vector<mpz_class>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

mpz_class BigPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

std::vector<std::uint64_t> BigPoly::reduced(Modulus m) const {
    std::vector<std::uint64_t> out(c_.size());
    mpz_class r, mm(static_cast<unsigned long>(m.value()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpz_mod(r.get_mpz_t(), c_[i].get_mpz_t(), mm.get_mpz_t()); // mpz_mod is non-negative
        out[i] = mpz_get_ui(r.get_mpz_t());
    }
    return out;
}

} // namespace fltv
