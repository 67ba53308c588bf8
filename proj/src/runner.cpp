#include "fltv/runner.hpp"

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <vector>

#include "fltv/checkpoint.hpp"
#include "fltv/modmath.hpp"
#include "fltv/verifier.hpp"

namespace fltv {

namespace {

void validate(const RunConfig& config) {
    if (config.conjecture != 1 && config.conjecture != 2)
        throw std::invalid_argument("conjecture must be 1 or 2");
    if (config.from < 5)
        throw std::invalid_argument("range must start at 5 or above");
    if (config.to < config.from)
        throw std::invalid_argument("empty range");
    if (config.to > kVerifyMaxPrime)
        throw std::invalid_argument("range end exceeds " + std::to_string(kVerifyMaxPrime));
    if (config.jobs < 1)
        throw std::invalid_argument("jobs must be >= 1");
}

// Latest complete line per prime for this conjecture; torn or foreign
// lines are skipped.
std::map<std::uint64_t, CheckpointLine> load_checkpoint(const std::string& path,
                                                        int conjecture) {
    std::map<std::uint64_t, CheckpointLine> done;
    std::ifstream in(path);
    std::string text;
    while (std::getline(in, text)) {
        auto line = parse_json_line(text);
        if (line && line->conjecture == conjecture)
            done.insert_or_assign(line->p, std::move(*line));
    }
    return done;
}

class CheckpointWriter {
public:
    explicit CheckpointWriter(const std::string& path) {
        if (path.empty())
            return;
        // A kill can leave a torn line without a newline; separate it so the
        // next line does not merge into it.
        bool needs_newline = false;
        if (std::ifstream existing(path, std::ios::binary); existing) {
            existing.seekg(0, std::ios::end);
            if (existing.tellg() > 0) {
                existing.seekg(-1, std::ios::end);
                needs_newline = existing.get() != '\n';
            }
        }
        out_.open(path, std::ios::app);
        if (!out_)
            throw std::runtime_error("cannot open checkpoint: " + path);
        if (needs_newline)
            out_ << '\n';
    }

    // One line, flushed before returning: a kill can tear at most the
    // line in flight, which resume discards.
    void append(const CheckpointLine& line) {
        if (!out_.is_open())
            return;
        out_ << to_json_line(line) << '\n';
        out_.flush();
    }

private:
    std::ofstream out_;
};

void write_report(const std::string& path,
                  const std::map<std::uint64_t, CheckpointLine>& resumed,
                  const std::vector<CheckpointLine>& fresh,
                  std::uint64_t from, std::uint64_t to) {
    std::map<std::uint64_t, const CheckpointLine*> by_p;
    for (const auto& [p, line] : resumed)
        if (p >= from && p <= to)
            by_p[p] = &line;
    for (const auto& line : fresh)
        by_p[line.p] = &line;

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write report: " + tmp);
        for (const auto& [p, line] : by_p)
            out << report_line(*line) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

RunSummary run_verify(const RunConfig& config) {
    validate(config);
    const auto t0 = std::chrono::steady_clock::now();

    std::map<std::uint64_t, CheckpointLine> resumed;
    if (!config.checkpoint_path.empty() &&
        std::filesystem::exists(config.checkpoint_path))
        resumed = load_checkpoint(config.checkpoint_path, config.conjecture);

    const auto range = primes_in_range(config.from, config.to);
    std::vector<std::uint64_t> todo;
    todo.reserve(range.primes.size());

    RunSummary summary;
    summary.primes_total = range.primes.size();
    for (std::uint64_t p : range.primes) {
        if (auto it = resumed.find(p); it != resumed.end()) {
            ++summary.primes_resumed;
            if (it->second.status == VerifyStatus::counterexample)
                ++summary.counterexamples;
            summary.suspicious_residues += it->second.suspicious.size();
            if (!it->second.suspicious.empty())
                ++summary.primes_with_suspicious;
        } else {
            todo.push_back(p);
        }
    }

    CheckpointWriter writer(config.checkpoint_path);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(todo.size());
    std::vector<CheckpointLine> results(todo.size());

    // Whole primes per thread while there is enough of them to go around;
    // otherwise spend the threads inside each stage-1 scan.
    const bool prime_level = config.jobs > 1 &&
                             todo.size() >= 2 * static_cast<std::size_t>(config.jobs);

    if (prime_level) {
        std::vector<char> ready(todo.size(), 0);
        std::size_t next = 0;
        const ScanPolicy policy{1, config.chunk};
        const int jobs = config.jobs;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            auto line = checkpoint_line(verify_conjecture(todo[i], config.conjecture, policy));
#pragma omp critical(fltv_checkpoint_append)
            {
                results[i] = std::move(line);
                ready[i] = 1;
                while (next < ready.size() && ready[next]) {
                    writer.append(results[next]);
                    ++next;
                }
            }
        }
    } else {
        const ScanPolicy policy{config.jobs, config.chunk};
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            results[i] = checkpoint_line(verify_conjecture(todo[i], config.conjecture, policy));
            writer.append(results[i]);
        }
    }

    summary.primes_new = todo.size();
    for (const auto& line : results) {
        if (line.status == VerifyStatus::counterexample)
            ++summary.counterexamples;
        summary.suspicious_residues += line.suspicious.size();
        if (!line.suspicious.empty())
            ++summary.primes_with_suspicious;
        if (line.ms > summary.slowest_ms || summary.slowest_p == 0) {
            summary.slowest_p = line.p;
            summary.slowest_ms = line.ms;
        }
    }

    if (!config.report_path.empty())
        write_report(config.report_path, resumed, results, config.from, config.to);

    summary.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return summary;
}

} // namespace fltv
