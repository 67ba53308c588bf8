#include "fltv/modmath.hpp"

#include <algorithm>
#include <cmath>

namespace fltv {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, Modulus m) {
    const std::uint64_t mm = m.value();
    // a, b < 2^63, so a + b cannot wrap.
    const std::uint64_t s = a + b;
    return s >= mm ? s - mm : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, Modulus m) {
    return a >= b ? a - b : a + m.value() - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, Modulus m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m.value());
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, Modulus m) {
    std::uint64_t result = 1 % m.value();
    std::uint64_t b = base % m.value();
    while (exp != 0) {
        if (exp & 1)
            result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

std::optional<std::uint64_t> inv_mod(std::uint64_t a, Modulus m) {
    // Extended Euclid on (a, m); coefficients stay below m < 2^63 in
    // absolute value, so signed 64-bit arithmetic is safe.
    std::int64_t r0 = static_cast<std::int64_t>(m.value());
    std::int64_t r1 = static_cast<std::int64_t>(a % m.value());
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        return std::nullopt;
    if (t0 < 0)
        t0 += static_cast<std::int64_t>(m.value());
    return static_cast<std::uint64_t>(t0);
}

std::uint64_t normalize_mod(std::int64_t x, Modulus m) {
    const std::int64_t mm = static_cast<std::int64_t>(m.value());
    std::int64_t r = x % mm;
    if (r < 0)
        r += mm;
    return static_cast<std::uint64_t>(r);
}

int p_adic_valuation(std::int64_t n, std::int64_t p) {
    if (n == 0)
        throw std::invalid_argument("p_adic_valuation: n must be nonzero");
    if (p < 2)
        throw std::invalid_argument("p_adic_valuation: p must be >= 2");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

namespace {

std::uint64_t mul_mod_raw(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    std::uint64_t b = base % m;
    while (exp != 0) {
        if (exp & 1)
            result = mul_mod_raw(result, b, m);
        b = mul_mod_raw(b, b, m);
        exp >>= 1;
    }
    return result;
}

// One Miller-Rabin round; n - 1 = d * 2^s with d odd.
bool mr_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a) {
    std::uint64_t x = pow_mod_raw(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod_raw(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for every 64-bit integer.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!mr_round(n, d, s, a))
            return false;
    }
    return true;
}

PrimeRange primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    PrimeRange result;
    result.lo = lo;
    result.hi = hi;
    if (lo < 2)
        lo = 2;
    if (lo > hi)
        return result;

    // Base primes up to sqrt(hi) by plain sieve.
    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<bool> base(root + 1, true);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!base[i])
            continue;
        base_primes.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i)
            base[j] = false;
    }

    constexpr std::uint64_t kSegment = 1u << 20;
    std::vector<bool> seg;
    for (std::uint64_t start = lo; start <= hi; start += kSegment) {
        const std::uint64_t end = std::min(hi, start + kSegment - 1);
        seg.assign(end - start + 1, true);
        for (std::uint64_t q : base_primes) {
            std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
            for (std::uint64_t j = first; j <= end; j += q)
                seg[j - start] = false;
        }
        // Crossing-off starts at q*q, so primes themselves are never marked.
        for (std::uint64_t v = start; v <= end; ++v) {
            if (seg[v - start])
                result.primes.push_back(v);
        }
        if (end == hi)
            break; // avoid wrap when hi is near the top of the range
    }
    return result;
}

} // namespace fltv
