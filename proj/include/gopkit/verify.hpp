#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gopkit {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Closed formulas against the brute-force census and each other, n = 1..n_max.
VerifyReport verify_formulas(std::uint32_t n_max, std::uint32_t jobs = 1);

/// LR_{1,N} conjectures; failures of the conjectures are reported as failed checks.
VerifyReport verify_statements(std::uint32_t n_max, std::uint32_t jobs = 1);

/// Bundled reference tables (orbit examples, threshold rank, cardinals, LR_{1,N} up to n_max,
/// (20,9,5,2,1) rows with small q, discretized logistic orbits).
VerifyReport verify_tables(std::uint32_t n_max, std::uint32_t jobs = 1);

}  // namespace gopkit
