#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fltv/fermat_poly.hpp"

// Two-stage verification that p^2 never divides H_p(X,1):
//
//   stage 1: scan the representatives X in [1, (p-1)/2] mod p and collect
//            the residues with H_p(X,1) = 0 (mod p). The symmetry
//            H_p(X,1) = H_p(-X-1,1) and the trivial values at X = 0, -1
//            make this set of representatives exhaustive.
//   stage 2: lift each suspicious residue to mod p^2. Conjecture 1 checks
//            every lift X + t*p; conjecture 2 checks only the lift with
//            X'^(p-1) = 1 (mod p^2), the Teichmuller representative.

namespace fltv {

struct SuspiciousResidue {
    std::uint64_t X;        // representative in [1, (p-1)/2]
    std::uint64_t h_mod_p;  // always 0

    bool operator==(const SuspiciousResidue&) const = default;
};

enum class VerifyStatus { verified, counterexample };

struct ConjectureReport {
    std::uint64_t p = 0;
    int conjecture = 0;
    VerifyStatus status = VerifyStatus::verified;
    std::optional<std::uint64_t> counterexample_lift; // residue mod p^2
    std::vector<SuspiciousResidue> suspicious;        // sorted by X
    std::uint64_t residues_scanned = 0;               // (p-1)/2 at stage 1
    std::int64_t ms = 0;
};

struct WieferichRecord {
    std::uint64_t p = 0;
    int valuation = 0; // v_p(2^(p-1) - 1); 3 means "at least 3"
};

struct ScanPolicy {
    int threads = 1;  // 1 keeps everything on the calling thread
    int chunk = 1024; // residues per OpenMP work unit
};

/// H_p(X,1) mod p^k through the closed form: ((X+1)^p - X^p - 1) computed
/// mod p^(k+1), divided by p, times the inverse of X(X+1)(X^2+X+1)^epsilon.
/// O(log p). nullopt when the denominator is not invertible mod p; callers
/// fall back to eval_h_horner.
std::optional<std::uint64_t> eval_h_direct(std::uint64_t p, std::uint64_t X, int k);

/// H_p(X,1) mod p^k by Horner on h_coeffs_mod. O(p), defined for every X.
std::uint64_t eval_h_horner(std::uint64_t p, std::uint64_t X, int k);

/// Serial reference scan, kept as the oracle for the OpenMP kernel.
std::vector<SuspiciousResidue> stage1_scan_serial(std::uint64_t p);

/// Stage-1 scan over X in [1, (p-1)/2]; OpenMP-chunked when
/// policy.threads > 1, with results merged in ascending X order.
std::vector<SuspiciousResidue> stage1_scan(std::uint64_t p, const ScanPolicy& policy = {});

/// X^p mod p^2: the unique lift of X with lift^(p-1) = 1 (mod p^2).
/// Rejects X = 0 (mod p).
std::uint64_t teichmuller_lift(std::uint64_t p, std::uint64_t X);

/// Full two-stage verification of conjecture 1 or 2 for one prime.
ConjectureReport verify_conjecture(std::uint64_t p, int which, const ScanPolicy& policy = {});

/// Valuation of 2^(p-1) - 1 at p, from 2^(p-1) mod p^3. A valuation >= 3
/// would contradict the divisibility bound and is reported as 3.
WieferichRecord wieferich_check(std::uint64_t p);

} // namespace fltv
