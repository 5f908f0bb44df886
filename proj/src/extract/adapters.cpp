#include "vidreq/extract/adapters.hpp"

#include <sstream>

#include <json.hpp>

#include "vidreq/core/error.hpp"
#include "vidreq/core/process.hpp"

namespace vidreq::extract {

namespace {

std::string format_seconds(double s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

}  // namespace

AsrOutput parse_asr_output(const std::string& stdout_text) {
    try {
        auto j = nlohmann::json::parse(stdout_text);
        AsrOutput out;
        if (auto it = j.find("language"); it != j.end() && it->is_string()) out.language = it->get<std::string>();
        for (const auto& s : j.at("segments")) {
            out.segments.push_back(
                {s.at("start").get<double>(), s.at("end").get<double>(), s.at("text").get<std::string>()});
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ContractViolation, std::string("ASR output: ") + e.what());
    }
}

std::vector<RawRegion> parse_ocr_output(const std::string& stdout_text) {
    try {
        auto j = nlohmann::json::parse(stdout_text);
        std::vector<RawRegion> out;
        for (const auto& r : j.at("regions")) {
            out.push_back({r.at("x").get<int>(), r.at("y").get<int>(), r.at("w").get<int>(), r.at("h").get<int>(),
                           r.at("text").get<std::string>()});
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ContractViolation, std::string("OCR output: ") + e.what());
    }
}

AsrOutput ExecutableAsr::run(const std::filesystem::path& media, double max_seconds) const {
    auto argv = command_;
    argv.push_back(media.string());
    argv.push_back(format_seconds(max_seconds));
    ProcessResult r = run_process(argv);
    if (r.exit_code != 0) {
        throw Error(ErrorKind::BackendUnavailable,
                    "ASR adapter exited with " + std::to_string(r.exit_code) + " for " + media.filename().string());
    }
    return parse_asr_output(r.out);
}

std::vector<RawRegion> ExecutableOcr::run(const std::filesystem::path& frame) const {
    auto argv = command_;
    argv.push_back(frame.string());
    ProcessResult r = run_process(argv);
    if (r.exit_code != 0) {
        throw Error(ErrorKind::BackendUnavailable,
                    "OCR adapter exited with " + std::to_string(r.exit_code) + " for " + frame.filename().string());
    }
    return parse_ocr_output(r.out);
}

std::vector<std::string> split_command(const std::string& command) {
    std::istringstream in(command);
    std::vector<std::string> out;
    std::string part;
    while (in >> part) out.push_back(part);
    return out;
}

}  // namespace vidreq::extract
