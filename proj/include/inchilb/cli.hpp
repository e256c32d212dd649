#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inchilb/hilbert.hpp"

namespace inchilb {

/// Usage errors; the message names the offending flag.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  int rows = 1;
  std::vector<std::string> gen_strings;
  std::vector<Monomial> gens;
  std::optional<std::vector<std::vector<int>>> weights;
  std::optional<std::pair<int, int>> expand;         // nmax, dmax
  std::optional<std::pair<int, int>> verify_bounds;  // nmax, dmax
  std::string dot_path;                              // empty: no dump
  bool latex = false;
  bool minimize_dfa = true;
};

/// Flags: --rows N, --gens "m1, m2", --weights "v1;v2;...",
/// --expand N D, --verify N D, --dot PATH, --latex, --no-minimize.
/// --rows defaults to 1.  Throws CliError on unknown flags, malformed
/// monomials, row indices past --rows, or zero weight vectors.
CliConfig parse_args(const std::vector<std::string>& args);

/// Prints the series (plus the optional expansion table and verify verdict)
/// and writes the optional DOT dump.  Returns the process exit status:
/// 0 on success, 1 when verification fails.
int run(const CliConfig& cfg, std::ostream& out);

std::string usage();

}  // namespace inchilb
