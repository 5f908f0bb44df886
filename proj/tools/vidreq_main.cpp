#include "vidreq/cli/app.hpp"

int main(int argc, char** argv) { return vidreq::cli::run(argc, argv); }
