#pragma once
// app.hpp - CLI front end. Every subcommand is a thin adapter over the
// library: parse flags, call the corresponding operation, serialize.
//
// Exit codes: 0 success, 1 usage/precondition error, 2 computation-contract
// violation (a theorem-check inequality or argmax law failing).

#include <string>
#include <vector>

namespace seqconv::cli {

int run(int argc, const char* const* argv);

// args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace seqconv::cli
