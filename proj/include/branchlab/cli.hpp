// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "branchlab/hn.hpp"

namespace branchlab {

enum class Verb { Tableau, Invariants, Resolve, Matrices, Intersect, Approx, Check, Oracle };
enum class Method { Tableau, Resultant, Noether, All };

struct Command {
  Verb verb = Verb::Tableau;
  std::vector<std::string> inputs;
  DepthPolicy depth = DepthPolicy::minimal();
  bool json = false;
  std::optional<std::size_t> index;
  Method method = Method::All;
  /// Number of random partners for the oracle verb.
  std::size_t count = 25;
};

/// Arguments exclude the program name. Errors: UnknownVerb, MissingArgument, BadOption.
Command parse_command(const std::vector<std::string>& args);

/// Usage text for the whole tool.
std::string usage();

/// Executes a parsed command. Returns 0 on success and 1 on a disagreement or failed check;
/// library errors propagate.
int run(const Command& c, std::ostream& out);

/// parse_command + run; errors are printed to err and mapped to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchlab
