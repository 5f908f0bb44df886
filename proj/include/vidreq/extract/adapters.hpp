#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vidreq/core/model.hpp"

namespace vidreq::extract {

inline constexpr double kMaxTranscribeSeconds = 1800.0;

// What a speech backend reports for one media file.
struct AsrOutput {
    std::optional<std::string> language;
    std::vector<AudioSegment> segments;
};

class AsrBackend {
public:
    virtual ~AsrBackend() = default;
    virtual AsrOutput run(const std::filesystem::path& media, double max_seconds) const = 0;
};

// Executable contract: `<cmd> <media_path> <max_seconds>` prints
// {"language": tag|null, "segments": [{"start","end","text"}]} and exits 0.
// Any other exit status is BackendUnavailable; unparseable output is a
// ContractViolation.
class ExecutableAsr final : public AsrBackend {
public:
    explicit ExecutableAsr(std::vector<std::string> command) : command_(std::move(command)) {}
    AsrOutput run(const std::filesystem::path& media, double max_seconds) const override;

private:
    std::vector<std::string> command_;
};

struct RawRegion {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    std::string text;
};

class OcrBackend {
public:
    virtual ~OcrBackend() = default;
    virtual std::vector<RawRegion> run(const std::filesystem::path& frame) const = 0;
};

// Executable contract: `<cmd> <frame_path>` prints
// {"regions": [{"x","y","w","h","text"}]} and exits 0.
class ExecutableOcr final : public OcrBackend {
public:
    explicit ExecutableOcr(std::vector<std::string> command) : command_(std::move(command)) {}
    std::vector<RawRegion> run(const std::filesystem::path& frame) const override;

private:
    std::vector<std::string> command_;
};

AsrOutput parse_asr_output(const std::string& stdout_text);
std::vector<RawRegion> parse_ocr_output(const std::string& stdout_text);

// Splits a command string on spaces ("python3 asr.py" -> {"python3","asr.py"}).
std::vector<std::string> split_command(const std::string& command);

}  // namespace vidreq::extract
