#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fltv {

// Modulus for 64-bit residue arithmetic. Kept below 2^63 so that products of
// canonical residues fit in an unsigned 128-bit intermediate; p^3 is still
// representable for primes up to 2*10^6.
class Modulus {
public:
    explicit Modulus(std::uint64_t m) : m_(m) {
        if (m < 2 || m >= (std::uint64_t{1} << 63))
            throw std::invalid_argument("Modulus: need 2 <= m < 2^63");
    }
    std::uint64_t value() const { return m_; }

private:
    std::uint64_t m_;
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, Modulus m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, Modulus m);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, Modulus m);

/// base^exp mod m by square-and-multiply; 0^0 = 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, Modulus m);

/// Modular inverse via extended Euclid. nullopt when gcd(a, m) > 1;
/// callers are expected to take a fallback path.
std::optional<std::uint64_t> inv_mod(std::uint64_t a, Modulus m);

/// Map a signed integer to its canonical residue in [0, m).
std::uint64_t normalize_mod(std::int64_t x, Modulus m);

/// Largest v with p^v | n. Rejects n = 0.
int p_adic_valuation(std::int64_t n, std::int64_t p);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

struct PrimeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> primes; // strictly increasing
};

/// All primes in [lo, hi] by segmented sieve. Requires 2 <= lo <= hi.
PrimeRange primes_in_range(std::uint64_t lo, std::uint64_t hi);

} // namespace fltv
