#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "fltv/checkpoint.hpp"
#include "fltv/modmath.hpp"
#include "fltv/runner.hpp"

using namespace fltv;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() /
                         ("fltv_runner_" + std::to_string(::getpid()) + "_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<CheckpointLine> parse_all(const fs::path& path) {
    std::vector<CheckpointLine> lines;
    std::ifstream in(path);
    std::string text;
    while (std::getline(in, text))
        if (auto line = parse_json_line(text))
            lines.push_back(std::move(*line));
    return lines;
}

RunConfig base_config(const fs::path& dir, int conjecture, std::uint64_t to) {
    RunConfig config;
    config.conjecture = conjecture;
    config.from = 5;
    config.to = to;
    config.checkpoint_path = (dir / "ck.jsonl").string();
    config.report_path = (dir / "report.jsonl").string();
    return config;
}

} // namespace

TEST_CASE("fresh run, checkpoint contents, idempotent rerun") {
    const auto dir = temp_dir("fresh");
    const auto config = base_config(dir, 1, 100);

    const auto s = run_verify(config);
    const auto expected = primes_in_range(5, 100).primes;
    CHECK(s.primes_total == expected.size());
    CHECK(s.primes_new == expected.size());
    CHECK(s.primes_resumed == 0);
    CHECK(s.counterexamples == 0);
    CHECK(s.slowest_p != 0);

    const auto lines = parse_all(config.checkpoint_path);
    REQUIRE(lines.size() == expected.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i].p == expected[i]); // strictly increasing p
        CHECK(lines[i].conjecture == 1);
        CHECK(lines[i].status == VerifyStatus::verified);
    }

    const std::string report = slurp(config.report_path);
    std::string rebuilt;
    for (const auto& line : lines)
        rebuilt += report_line(line) + "\n";
    CHECK(report == rebuilt);

    const auto again = run_verify(config);
    CHECK(again.primes_new == 0);
    CHECK(again.primes_resumed == expected.size());
    CHECK(parse_all(config.checkpoint_path).size() == expected.size());
    CHECK(slurp(config.report_path) == report);
}

TEST_CASE("report bytes are identical across job counts") {
    const auto dir1 = temp_dir("jobs1");
    const auto dir8 = temp_dir("jobs8");
    auto c1 = base_config(dir1, 2, 500);
    auto c8 = base_config(dir8, 2, 500);
    c8.jobs = 8;

    run_verify(c1);
    run_verify(c8);
    const std::string r1 = slurp(c1.report_path);
    CHECK(!r1.empty());
    CHECK(r1 == slurp(c8.report_path));
}

TEST_CASE("few primes with many jobs takes the within-prime path") {
    const auto dir1 = temp_dir("small1");
    const auto dir8 = temp_dir("small8");
    auto c1 = base_config(dir1, 1, 30);
    auto c8 = base_config(dir8, 1, 30); // 8 primes < 2*jobs
    c8.jobs = 8;

    const auto s1 = run_verify(c1);
    const auto s8 = run_verify(c8);
    CHECK(s1.primes_new == 8);
    CHECK(s8.primes_new == 8);
    CHECK(slurp(c1.report_path) == slurp(c8.report_path));
}

TEST_CASE("a torn final line is recomputed on resume") {
    const auto dir = temp_dir("torn");
    const auto pristine_dir = temp_dir("torn_ref");
    const auto config = base_config(dir, 1, 100);
    run_verify(base_config(pristine_dir, 1, 100));
    const std::string want = slurp(pristine_dir / "report.jsonl");

    run_verify(config);
    std::string ck = slurp(config.checkpoint_path);
    REQUIRE(ck.size() > 20);
    ck.resize(ck.size() - 15); // tear the tail of the last line
    std::ofstream(config.checkpoint_path, std::ios::trunc | std::ios::binary) << ck;

    const auto resumed = run_verify(config);
    CHECK(resumed.primes_new == 1);
    CHECK(resumed.primes_resumed == primes_in_range(5, 100).primes.size() - 1);
    CHECK(slurp(config.report_path) == want);
}

TEST_CASE("checkpoint lines of the other conjecture are ignored") {
    const auto dir = temp_dir("mixed");
    auto c1 = base_config(dir, 1, 50);
    auto c2 = base_config(dir, 2, 50); // same checkpoint file
    c2.report_path = (dir / "report2.jsonl").string();

    run_verify(c1);
    const auto s2 = run_verify(c2);
    CHECK(s2.primes_resumed == 0);
    CHECK(s2.primes_new == primes_in_range(5, 50).primes.size());

    const auto s1 = run_verify(c1);
    CHECK(s1.primes_new == 0);

    for (const auto& line : parse_all(c2.report_path))
        CHECK(line.conjecture == 2);
}

TEST_CASE("a recorded counterexample survives resume and reporting") {
    const auto dir = temp_dir("counter");
    const auto config = base_config(dir, 1, 11);

    CheckpointLine fake;
    fake.p = 7;
    fake.conjecture = 1;
    fake.status = VerifyStatus::counterexample;
    fake.suspicious = {2};
    fake.lift = 30;
    std::ofstream(config.checkpoint_path) << to_json_line(fake) << '\n';

    const auto s = run_verify(config);
    CHECK(s.primes_total == 3);  // 5, 7, 11
    CHECK(s.primes_resumed == 1);
    CHECK(s.primes_new == 2);
    CHECK(s.counterexamples == 1);

    const std::string report = slurp(config.report_path);
    CHECK(report.find("\"counterexample\"") != std::string::npos);
    CHECK(report.find("\"lift\":30") != std::string::npos);
}

TEST_CASE("no files requested still verifies") {
    RunConfig config;
    config.conjecture = 2;
    config.from = 5;
    config.to = 50;
    const auto s = run_verify(config);
    CHECK(s.primes_new == primes_in_range(5, 50).primes.size());
    CHECK(s.counterexamples == 0);
}

TEST_CASE("config validation") {
    RunConfig config;
    config.from = 4;
    config.to = 100;
    CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
    config.from = 100;
    config.to = 50;
    CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
    config.to = 3'000'000;
    CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
    config = {};
    config.to = 100;
    config.jobs = 0;
    CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
    config = {};
    config.to = 100;
    config.conjecture = 3;
    CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
    config = {};
    config.to = 100;
    config.checkpoint_path = "/nonexistent-dir/ck.jsonl";
    CHECK_THROWS_AS(run_verify(config), std::runtime_error);
}
