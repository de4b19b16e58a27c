#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twodist/matrix.hpp"

namespace twodist::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kViolations = 1,   // sweep found invariant violations
  kBadInput = 2,     // unparsable graph, bad flags, unsupported sweep size
  kInternal = 3,     // internal consistency diagnostic
  kInfeasible = 4,   // requested embedding does not exist
};

// Entry point for `twodist analyze|embed|sweep`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One row per point, comma separated, 17 significant digits.
void write_coordinates_csv(const Matrix& points, std::ostream& os);
Matrix read_coordinates_csv(std::istream& is);

}  // namespace twodist::cli
