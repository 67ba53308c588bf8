#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fltv/verifier.hpp"

// Checkpoint and report serialization. A checkpoint is an append-only file
// of one JSON object per line, flushed after every prime so a killed run
// loses at most the line being written. A report is the same data with the
// timing field dropped and the lines sorted by p, so two runs over the same
// range produce byte-identical files regardless of job count.

namespace fltv {

inline constexpr int kCheckpointSchema = 1;

struct CheckpointLine {
    int schema = kCheckpointSchema;
    std::uint64_t p = 0;
    int conjecture = 0;
    VerifyStatus status = VerifyStatus::verified;
    std::vector<std::uint64_t> suspicious;       // stage-1 roots, ascending X
    std::optional<std::uint64_t> lift;           // residue mod p^2, counterexamples only
    std::int64_t ms = 0;
};

CheckpointLine checkpoint_line(const ConjectureReport& report);

/// One checkpoint line, fields in fixed order, no trailing newline.
std::string to_json_line(const CheckpointLine& line);

/// Parses one checkpoint line. nullopt for blank, truncated, or
/// wrong-schema input: resuming tolerates a torn final line.
std::optional<CheckpointLine> parse_json_line(const std::string& text);

/// The report form of a line: as to_json_line but without "ms".
std::string report_line(const CheckpointLine& line);

} // namespace fltv
