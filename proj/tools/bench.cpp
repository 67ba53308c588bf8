// Timing comparison of the stage-1 scan kernels: serial reference vs the
// OpenMP-chunked version at 1, 2, 4, ... threads, plus the closed-form
// evaluator against Horner. Usage: bench [p] [max-threads]

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "fltv/modmath.hpp"
#include "fltv/verifier.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t p = 99991;
    int max_threads = omp_get_max_threads();
    if (argc > 1)
        p = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2)
        max_threads = std::atoi(argv[2]);
    if (!fltv::is_prime(p) || p <= 3) {
        std::cerr << "need a prime > 3\n";
        return 1;
    }

    std::cout << "stage-1 scan of H_" << p << "(X,1) mod " << p << ", X in [1, "
              << (p - 1) / 2 << "]\n";

    auto t0 = clock_type::now();
    const auto serial = fltv::stage1_scan_serial(p);
    const double serial_ms = ms_since(t0);
    std::cout << "serial reference: " << serial_ms << " ms, "
              << serial.size() << " suspicious residues\n";

    for (int threads = 1; threads <= max_threads; threads *= 2) {
        t0 = clock_type::now();
        const auto parallel = fltv::stage1_scan(p, {threads, 1024});
        const double par_ms = ms_since(t0);
        std::cout << "openmp x" << threads << ": " << par_ms << " ms, speedup "
                  << serial_ms / par_ms
                  << (parallel == serial ? "" : "  ** MISMATCH **") << '\n';
    }

    // Closed form vs Horner on a fixed residue sample.
    const std::uint64_t samples = std::min<std::uint64_t>(2000, (p - 1) / 2);
    t0 = clock_type::now();
    std::uint64_t sink = 0;
    for (std::uint64_t X = 1; X <= samples; ++X)
        sink ^= fltv::eval_h_direct(p, X, 1).value_or(0);
    const double direct_ms = ms_since(t0);
    t0 = clock_type::now();
    for (std::uint64_t X = 1; X <= samples; ++X)
        sink ^= fltv::eval_h_horner(p, X, 1);
    const double horner_ms = ms_since(t0);
    std::cout << "eval at " << samples << " residues: closed form " << direct_ms
              << " ms, Horner " << horner_ms << " ms (checksum " << sink << ")\n";
    return 0;
}
