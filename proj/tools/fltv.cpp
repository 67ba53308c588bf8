// fltv: checks that H_p(x,y) = ((x+y)^p - x^p - y^p) / (p x y (x+y) f^eps)
// is never 0 mod p^2 -- across all lifts of a residue (conjecture 1) or at
// the Teichmuller lift only (conjecture 2) -- plus coefficient dumps, the
// mixed-basis identity suite, a Wieferich-style valuation sweep, and the
// exact big-integer oracle battery.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 counterexample found.

#include <cstdint>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vendor/CLI11.hpp"

#include "fltv/errors.hpp"
#include "fltv/fermat_poly.hpp"
#include "fltv/modmath.hpp"
#include "fltv/oracle.hpp"
#include "fltv/runner.hpp"
#include "fltv/verifier.hpp"

namespace {

using namespace fltv;

int cmd_verify(const RunConfig& config) {
    const RunSummary s = run_verify(config);
    std::cout << "conjecture " << config.conjecture << " over [" << config.from
              << ", " << config.to << "]: " << s.primes_total << " primes, "
              << s.primes_new << " new, " << s.primes_resumed << " resumed, "
              << s.counterexamples << " counterexamples\n";
    std::cout << "suspicious residues: " << s.suspicious_residues << " across "
              << s.primes_with_suspicious << " primes\n";
    if (s.slowest_p != 0)
        std::cout << "slowest prime: " << s.slowest_p << " (" << s.slowest_ms
                  << " ms)\n";
    std::cout << "elapsed: " << s.ms << " ms\n";
    return s.counterexamples == 0 ? 0 : 2;
}

void dump_exact(const std::vector<mpz_class>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << i << '\t' << coeffs[i].get_str() << '\n';
}

void dump_mod(const std::vector<std::uint64_t>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << i << '\t' << coeffs[i] << '\n';
}

int cmd_coeffs(std::uint64_t p, const std::string& mode, const std::string& which) {
    const int k = mode == "mod-p2" ? 2 : 1;

    if (which == "W") {
        const WTable table = w_table(p); // validates odd 3 <= p <= 101
        if (mode == "exact")
            dump_exact(table.W);
        else {
            const mpz_class mz = mpz_class(static_cast<unsigned long>(p)) *
                                 (k == 2 ? static_cast<unsigned long>(p) : 1ul);
            std::vector<std::uint64_t> reduced;
            reduced.reserve(table.W.size());
            for (const auto& w : table.W) {
                mpz_class r;
                mpz_mod(r.get_mpz_t(), w.get_mpz_t(), mz.get_mpz_t());
                reduced.push_back(r.get_ui());
            }
            dump_mod(reduced);
        }
        return 0;
    }

    if (mode == "exact") {
        dump_exact((which == "G" ? g_exact(p) : h_exact(p)).coeffs());
        return 0;
    }
    dump_mod((which == "G" ? g_coeffs_mod(p, k) : h_coeffs_mod(p, k)).coeffs);
    return 0;
}

int cmd_identity(std::uint64_t max_n) {
    if (max_n % 2 == 0) {
        std::cerr << "error: n must be odd\n";
        return 1;
    }
    for (std::uint64_t n = 3; n <= max_n; n += 2) {
        const WTable table = w_table(n);
        if (table.W.front() != static_cast<unsigned long>(n)) {
            std::cerr << "W_0 != n at n=" << n << '\n';
            return 1;
        }
        const bool flip = ((n - 3) / 2) % 2 != 0;
        mpz_class want(static_cast<unsigned long>(n));
        if (flip)
            want = -want;
        if (table.last() != want) {
            std::cerr << "endpoint W_{(n-3)/2} != (-1)^{(n-3)/2} n at n=" << n << '\n';
            return 1;
        }
        if (!verify_w_basis_identity(n)) {
            std::cerr << "mixed-basis identity failed at n=" << n << '\n';
            return 1;
        }
        if (n > 3 && is_prime(n)) {
            for (const auto& w : table.W)
                if (!mpz_divisible_ui_p(w.get_mpz_t(), static_cast<unsigned long>(n))) {
                    std::cerr << "W_j not divisible by prime n=" << n << '\n';
                    return 1;
                }
        }
    }
    std::cout << "identity, endpoints and prime divisibility hold for odd n <= "
              << max_n << '\n';
    return 0;
}

int cmd_wieferich(std::uint64_t to) {
    bool high_valuation = false;
    for (std::uint64_t p : primes_in_range(2, to).primes) {
        const WieferichRecord rec = wieferich_check(p);
        if (rec.valuation >= 2) {
            std::cout << rec.p << '\t' << rec.valuation << '\n';
            high_valuation |= rec.valuation >= 3;
        }
    }
    return high_valuation ? 2 : 0;
}

int cmd_oracle(std::uint64_t max_p) {
    const auto primes = primes_in_range(5, max_p).primes;
    bool ok = true;

    bool cross = true;
    for (std::uint64_t p : primes)
        for (int k = 1; k <= 2; ++k)
            cross = cross && crosscheck_modular(p, k);
    std::cout << "coefficient/evaluation crosscheck, primes in (3, " << max_p
              << "], k in {1,2}: " << (cross ? "ok" : "FAIL") << '\n';
    ok = ok && cross;

    bool fermat = true;
    for (std::uint64_t p : primes)
        fermat = fermat && fermat_quotient_relation_check(p);
    std::cout << "fermat-quotient relation H_p(1,1) 3^eps p = 2^(p-1) - 1: "
              << (fermat ? "ok" : "FAIL") << '\n';
    ok = ok && fermat;

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> coord(1, 1'000'000);
    std::uniform_int_distribution<std::uint64_t> odd_n(0, 49);
    bool gcd_ok = true;
    int done = 0;
    while (done < 10'000) {
        mpz_class x(static_cast<unsigned long>(coord(rng)));
        mpz_class y(static_cast<unsigned long>(coord(rng)));
        if (rng() % 4 == 0)
            y = -y;
        if (x + y == 0 || gcd(x, y) != 1)
            continue;
        gcd_ok = gcd_ok && power_sum_gcd_check(x, y, 2 * odd_n(rng) + 1);
        ++done;
    }
    std::cout << "power-sum gcd identity, 10000 coprime pairs, odd n <= 99: "
              << (gcd_ok ? "ok" : "FAIL") << '\n';
    ok = ok && gcd_ok;

    try {
        const auto cases = norm_form_factor_scan(300);
        std::cout << "norm-form factor scan to 300: ok (" << cases.size()
                  << " coprime pairs, no factor 5 mod 6)\n";
    } catch (const norm_form_violation& e) {
        std::cout << "norm-form factor scan to 300: FAIL (" << e.what() << ")\n";
        ok = false;
    }

    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for the p^2 non-divisibility conjectures on "
                 "H_p = ((x+y)^p - x^p - y^p)/(p x y (x+y) f^eps)"};
    app.require_subcommand(1);

    RunConfig config;
    // default job count from the environment; an explicit --jobs wins, and
    // run_verify rejects anything below 1 loudly
    if (const char* env = std::getenv("FLTV_JOBS"))
        config.jobs = std::atoi(env);
    auto* verify = app.add_subcommand("verify", "scan primes in a range");
    verify->add_option("--conjecture", config.conjecture, "1: all lifts mod p^2, 2: Teichmuller lift")
        ->required()
        ->check(CLI::Range(1, 2));
    verify->add_option("--from", config.from, "first prime considered (>= 5)")
        ->required()
        ->check(CLI::Range(std::uint64_t{5}, kVerifyMaxPrime));
    verify->add_option("--to", config.to, "last prime considered")
        ->required()
        ->check(CLI::Range(std::uint64_t{5}, kVerifyMaxPrime));
    verify->add_option("--jobs", config.jobs, "worker threads (default: FLTV_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--checkpoint", config.checkpoint_path,
                       "append-only JSON-lines progress file; reruns skip completed primes");
    verify->add_option("--report", config.report_path,
                       "sorted report rebuilt atomically at the end of the run");
    verify->add_option("--chunk", config.chunk, "stage-1 residues per work unit")
        ->check(CLI::PositiveNumber);

    std::uint64_t coeffs_p = 0;
    std::string mode, which;
    auto* coeffs = app.add_subcommand("coeffs", "dump coefficient tables, one `index<TAB>value` per line");
    coeffs->add_option("--p", coeffs_p, "prime (or odd n for W)")->required();
    coeffs->add_option("--mode", mode, "exact | mod-p | mod-p2")
        ->required()
        ->check(CLI::IsMember({"exact", "mod-p", "mod-p2"}));
    coeffs->add_option("--which", which, "W | G | H")
        ->required()
        ->check(CLI::IsMember({"W", "G", "H"}));

    std::uint64_t max_n = 0;
    auto* identity = app.add_subcommand("identity", "exact mixed-basis identity suite for odd n");
    identity->add_option("--max-n", max_n, "largest n checked (odd, <= 101)")
        ->required()
        ->check(CLI::Range(std::uint64_t{3}, kExactSizeLimit));

    std::uint64_t wief_to = 0;
    auto* wieferich = app.add_subcommand(
        "wieferich", "primes p <= N with p^2 | 2^(p-1) - 1, as `p<TAB>valuation`");
    wieferich->add_option("--to", wief_to, "sweep bound (<= 10^7)")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{10'000'000}));

    std::uint64_t max_p = 0;
    auto* oracle = app.add_subcommand("oracle", "exact big-integer cross-validation battery");
    oracle->add_option("--max-p", max_p, "largest oracle prime (<= 61)")
        ->required()
        ->check(CLI::Range(std::uint64_t{5}, kOracleMaxPrime));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (verify->parsed())
            return cmd_verify(config);
        if (coeffs->parsed())
            return cmd_coeffs(coeffs_p, mode, which);
        if (identity->parsed())
            return cmd_identity(max_n);
        if (wieferich->parsed())
            return cmd_wieferich(wief_to);
        return cmd_oracle(max_p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
