#pragma once

#include <cstdint>
#include <string>

// Range driver for the conjecture verifier: enumerates primes in [from, to],
// skips any already recorded in the checkpoint, distributes the rest over
// OpenMP threads, and appends one checkpoint line per prime in increasing-p
// order with a flush after each line. When many primes remain the threads
// each take whole primes; when only a few remain the stage-1 scan inside
// each prime is parallelized instead. The report, when requested, is rebuilt
// from resumed plus new results and swapped into place atomically, so its
// bytes depend only on the range and conjecture, not on job count or on how
// often the run was interrupted.

namespace fltv {

inline constexpr std::uint64_t kVerifyMaxPrime = 2'000'000;

struct RunConfig {
    int conjecture = 1;          // 1 = every lift mod p^2, 2 = Teichmuller lift
    std::uint64_t from = 5;
    std::uint64_t to = 5;
    int jobs = 1;
    std::string checkpoint_path; // empty: no checkpoint, no resume
    std::string report_path;     // empty: no report
    int chunk = 1024;            // stage-1 residues per OpenMP work unit
};

struct RunSummary {
    std::uint64_t primes_total = 0;        // primes in [from, to]
    std::uint64_t primes_new = 0;          // verified in this run
    std::uint64_t primes_resumed = 0;      // taken from the checkpoint
    std::uint64_t counterexamples = 0;     // across resumed and new
    std::uint64_t suspicious_residues = 0; // stage-1 roots, resumed and new
    std::uint64_t primes_with_suspicious = 0;
    std::uint64_t slowest_p = 0;           // among new primes; 0 if none
    std::int64_t slowest_ms = 0;
    std::int64_t ms = 0;
};

RunSummary run_verify(const RunConfig& config);

} // namespace fltv
