#ifndef LIEOPS_CLI_HPP
#define LIEOPS_CLI_HPP

#include "lieops/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lieops::cli {

enum class OutputFormat { text, json, dot, latex };

/// Options shared by all subcommands. Defaults documented in the README.
struct RunConfig {
  std::string command;
  std::string algebra;
  std::string crossing;
  bool crossing_given = false;
  std::string weight;
  bool weight_given = false;
  std::string target;
  int alpha = 0;  ///< 1-based index into the positive roots, 0 = all
  int ladder_step = 0;
  int order = -1;
  Rational scale{1};
  OutputFormat format = OutputFormat::text;
  std::size_t weyl_cap = 60000;
  int order_cap = 32;
};

enum ExitCode : int { ok = 0, internal_error = 1, usage_error = 2 };

/// Parses argv-style arguments (args[0] is the program name) and runs the
/// selected subcommand. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieops::cli

#endif  // LIEOPS_CLI_HPP
