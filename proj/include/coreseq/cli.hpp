#pragma once

#include <ostream>

namespace coreseq {

// Exit codes: 0 provable/valid/success, 1 unprovable/invalid, 2 usage,
// parse, I/O or resource-limit error, 3 internal disagreement (repro).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coreseq
