#include "fltv/checkpoint.hpp"

#include "vendor/json.hpp"

namespace fltv {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* status_name(VerifyStatus s) {
    return s == VerifyStatus::verified ? "verified" : "counterexample";
}

ordered_json to_json(const CheckpointLine& line, bool with_ms) {
    ordered_json j;
    j["schema"] = line.schema;
    j["p"] = line.p;
    j["conjecture"] = line.conjecture;
    j["status"] = status_name(line.status);
    j["suspicious"] = line.suspicious;
    if (line.lift)
        j["lift"] = *line.lift;
    if (with_ms)
        j["ms"] = line.ms;
    return j;
}

} // namespace

CheckpointLine checkpoint_line(const ConjectureReport& report) {
    CheckpointLine line;
    line.p = report.p;
    line.conjecture = report.conjecture;
    line.status = report.status;
    line.suspicious.reserve(report.suspicious.size());
    for (const auto& s : report.suspicious)
        line.suspicious.push_back(s.X);
    line.lift = report.counterexample_lift;
    line.ms = report.ms;
    return line;
}

std::string to_json_line(const CheckpointLine& line) {
    return to_json(line, true).dump();
}

std::optional<CheckpointLine> parse_json_line(const std::string& text) {
    const auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        return std::nullopt;
    try {
        CheckpointLine line;
        line.schema = j.at("schema").get<int>();
        if (line.schema != kCheckpointSchema)
            return std::nullopt;
        line.p = j.at("p").get<std::uint64_t>();
        line.conjecture = j.at("conjecture").get<int>();
        const auto status = j.at("status").get<std::string>();
        if (status == "verified")
            line.status = VerifyStatus::verified;
        else if (status == "counterexample")
            line.status = VerifyStatus::counterexample;
        else
            return std::nullopt;
        line.suspicious = j.at("suspicious").get<std::vector<std::uint64_t>>();
        if (j.contains("lift"))
            line.lift = j.at("lift").get<std::uint64_t>();
        line.ms = j.value("ms", std::int64_t{0});
        return line;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

std::string report_line(const CheckpointLine& line) {
    return to_json(line, false).dump();
}

} // namespace fltv
