#pragma once

#include <string>
#include <vector>

namespace qlat::repro {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full reproduction suite; `quick` lowers sampling counts without
/// skipping any criterion.
std::vector<CriterionResult> run_all(bool quick);

}  // namespace qlat::repro
