#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamsym/factorization.hpp"
#include "hamsym/graph.hpp"

#ifndef HAMSYM_VERSION
#define HAMSYM_VERSION "0.0.0"
#endif

namespace hamsym {

inline constexpr const char* kToolVersion = HAMSYM_VERSION;

// Family expressions:
//
//   fam   = "cycle" INT | "complete" INT | "bipartite" INT INT | "prism" INT
//         | "product" fam fam | "trunc" fam | "cayley" group "gens=" elems
//         | "gadget" INT INT | "comp-cycle" INT | "(" fam ")"
//   group = "Z" INT { "x" "Z" INT }
//   elems = elem { "," elem }
//   elem  = INT | "(" INT { "," INT } ")"
//
// Cayley generators are closed under inverses before use. Errors are
// ParseError with a 1-based column.
struct ParsedFamily {
  Graph graph;
  std::optional<CayleyHint> cayley;   // set when the top level is a Cayley graph
};
ParsedFamily parse_family(std::string_view text);

enum ExitCode { kExitOk = 0, kExitError = 1, kExitUsage = 2, kExitInconclusive = 3 };

// Runs one subcommand; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hamsym
