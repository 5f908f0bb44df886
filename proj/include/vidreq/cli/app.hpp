#pragma once

#include <filesystem>
#include <string>

namespace vidreq::cli {

// Entry point of the `vidreq` command. Returns the process exit status:
// 0 success, 1 validation error, 2 backend failure. Failures are reported on
// stderr as {"error": kind, "detail": text}.
int run(int argc, char** argv);

// Directory holding the running executable (used to locate the stub adapters).
std::filesystem::path executable_dir();

}  // namespace vidreq::cli
