// Batch command-line surface: one binary, subcommands for point arithmetic,
// the sequence sweep, system emission, witness build/check, classification,
// system reductions and multiple recognition. Deterministic output, exact
// numbers only; exit 0 on success, 1 on semantic rejection, 2 on malformed
// input.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zplusi {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zplusi
