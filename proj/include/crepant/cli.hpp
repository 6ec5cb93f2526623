#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "crepant/config.hpp"

namespace crepant::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Table-independent golden values.
std::vector<Check> golden_checks();
// Geometry, resolution, DG identities, transfer and Jacobi checks for one table.
std::vector<Check> table_checks(const LambdaTable& lambdas, const Limits& limits);

}  // namespace crepant::cli
