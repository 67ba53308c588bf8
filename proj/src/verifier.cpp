#include "fltv/verifier.hpp"

#include <algorithm>
#include <chrono>

#include <omp.h>

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

// Evaluate H at one mod-p^2 lift, preferring the closed form; `h2` is a
// lazily built coefficient table shared across the lifts of one prime.
std::uint64_t eval_h_mod_p2(std::uint64_t p, std::uint64_t lift, std::optional<ModPoly>& h2) {
    if (auto v = eval_h_direct(p, lift, 2))
        return *v;
    if (!h2)
        h2 = h_coeffs_mod(p, 2);
    return eval_mod_poly(*h2, lift);
}

} // namespace

std::optional<std::uint64_t> eval_h_direct(std::uint64_t p, std::uint64_t X, int k) {
    require_prime_gt3(p, "eval_h_direct");
    if (k != 1 && k != 2)
        throw std::invalid_argument("eval_h_direct: k must be 1 or 2");

    const Modulus pk(pow_u64(p, k));
    const Modulus pk1(pow_u64(p, k + 1));
    X %= pk.value();

    const int eps = epsilon_for(p);
    const std::uint64_t f_at_x = add_mod(add_mod(mul_mod(X, X, pk), X, pk), 1, pk);
    std::uint64_t den = mul_mod(X, add_mod(X, 1, pk), pk);
    den = mul_mod(den, pow_mod(f_at_x, static_cast<std::uint64_t>(eps), pk), pk);
    const auto den_inv = inv_mod(den, pk);
    if (!den_inv)
        return std::nullopt;

    // N = (X+1)^p - X^p - 1 mod p^(k+1); N = 0 (mod p) by Fermat.
    std::uint64_t n = pow_mod((X + 1) % pk1.value(), p, pk1);
    n = sub_mod(n, pow_mod(X, p, pk1), pk1);
    n = sub_mod(n, 1, pk1);
    const std::uint64_t n_over_p = (n / p) % pk.value();
    return mul_mod(n_over_p, *den_inv, pk);
}

std::uint64_t eval_h_horner(std::uint64_t p, std::uint64_t X, int k) {
    const ModPoly h = h_coeffs_mod(p, k);
    return eval_mod_poly(h, X % h.modulus.value());
}

namespace {

// Scan body shared by the serial and OpenMP paths: H(X) mod p with the
// closed form, falling back to the coefficient table for the (at most one)
// representative where x^2+x+1 vanishes mod p.
std::uint64_t h_mod_p_at(std::uint64_t p, std::uint64_t X, std::optional<ModPoly>& h1) {
    if (auto v = eval_h_direct(p, X, 1))
        return *v;
    if (!h1)
        h1 = h_coeffs_mod(p, 1);
    return eval_mod_poly(*h1, X);
}

} // namespace

std::vector<SuspiciousResidue> stage1_scan_serial(std::uint64_t p) {
    require_prime_gt3(p, "stage1_scan_serial");
    std::vector<SuspiciousResidue> out;
    std::optional<ModPoly> h1;
    for (std::uint64_t X = 1; X <= (p - 1) / 2; ++X) {
        if (h_mod_p_at(p, X, h1) == 0)
            out.push_back({X, 0});
    }
    return out;
}

std::vector<SuspiciousResidue> stage1_scan(std::uint64_t p, const ScanPolicy& policy) {
    require_prime_gt3(p, "stage1_scan");
    if (policy.threads <= 1)
        return stage1_scan_serial(p);

    const std::int64_t half = static_cast<std::int64_t>((p - 1) / 2);
    const int chunk = policy.chunk > 0 ? policy.chunk : 1024;
    std::vector<std::uint64_t> hits;
#pragma omp parallel num_threads(policy.threads)
    {
        std::vector<std::uint64_t> local;
        std::optional<ModPoly> h1;
#pragma omp for schedule(dynamic, chunk) nowait
        for (std::int64_t x = 1; x <= half; ++x) {
            const auto X = static_cast<std::uint64_t>(x);
            if (h_mod_p_at(p, X, h1) == 0)
                local.push_back(X);
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end()); // deterministic merge
    std::vector<SuspiciousResidue> out;
    out.reserve(hits.size());
    for (std::uint64_t X : hits)
        out.push_back({X, 0});
    return out;
}

std::uint64_t teichmuller_lift(std::uint64_t p, std::uint64_t X) {
    require_prime_gt3(p, "teichmuller_lift");
    if (X % p == 0)
        throw std::invalid_argument("teichmuller_lift: X must be nonzero mod p");
    return pow_mod(X, p, Modulus(p * p));
}

ConjectureReport verify_conjecture(std::uint64_t p, int which, const ScanPolicy& policy) {
    require_prime_gt3(p, "verify_conjecture");
    if (which != 1 && which != 2)
        throw std::invalid_argument("verify_conjecture: conjecture must be 1 or 2");

    const auto t0 = std::chrono::steady_clock::now();
    ConjectureReport report;
    report.p = p;
    report.conjecture = which;
    report.suspicious = stage1_scan(p, policy);
    report.residues_scanned = (p - 1) / 2;

    // Stage 2: H(X') = H(X) (mod p) for every lift X' of X, so only the
    // suspicious residues can produce a zero mod p^2.
    std::optional<ModPoly> h2;
    for (const SuspiciousResidue& s : report.suspicious) {
        if (report.status == VerifyStatus::counterexample)
            break;
        if (which == 1) {
            for (std::uint64_t t = 0; t < p; ++t) {
                const std::uint64_t lift = s.X + t * p;
                if (eval_h_mod_p2(p, lift, h2) == 0) {
                    report.status = VerifyStatus::counterexample;
                    report.counterexample_lift = lift;
                    break;
                }
            }
        } else {
            const std::uint64_t lift = teichmuller_lift(p, s.X);
            if (eval_h_mod_p2(p, lift, h2) == 0) {
                report.status = VerifyStatus::counterexample;
                report.counterexample_lift = lift;
            }
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

WieferichRecord wieferich_check(std::uint64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("wieferich_check: p must be prime");
    if (p == 2)
        return {2, 0}; // 2^1 - 1 = 1
    if (p == 3)
        return {3, 1}; // 2^2 - 1 = 3

    const std::uint64_t p2 = p * p;
    if (pow_mod(2, p - 1, Modulus(p2)) != 1)
        return {p, 1};
    // 2^(p-1) = 1 (mod p^2): decide valuation 2 vs >= 3 mod p^3.
    if (p < (std::uint64_t{1} << 21)) {
        const std::uint64_t r3 = pow_mod(2, p - 1, Modulus(p2 * p));
        return {p, r3 == 1 ? 3 : 2};
    }
    // p^3 exceeds the 64-bit modulus cap; exact fallback.
    mpz_class m3 = mpz_class(static_cast<unsigned long>(p));
    m3 = m3 * m3 * m3;
    mpz_class r, two(2);
    mpz_powm_ui(r.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(p - 1), m3.get_mpz_t());
    return {p, r == 1 ? 3 : 2};
}

} // namespace fltv
