#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vidreq {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

using EnvOverrides = std::vector<std::pair<std::string, std::string>>;

// Runs argv[0] (PATH lookup applies), feeds `input` on stdin and collects
// stdout/stderr. Throws Error(BackendUnavailable) when the program cannot be
// started. A signal-terminated child reports exit code 128 + signal.
ProcessResult run_process(const std::vector<std::string>& argv,
                          std::string_view input = {},
                          const EnvOverrides& env = {});

}  // namespace vidreq
