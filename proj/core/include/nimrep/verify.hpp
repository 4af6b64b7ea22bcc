#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nimrep/knowledge.hpp"
#include "nimrep/polynomial.hpp"

namespace nimrep {

struct VerifyCheck {
  std::string id;  // "A1" .. "A12"
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// "paper": checks against fixed literal values; "quick": everything except A11 with n <= 6;
  /// "full": every check at full scale.
  std::string suite = "paper";
  unsigned jobs = 1;
  /// Replaces the expected n=4 apex-J2 annihilator (used to exercise failure reporting).
  std::optional<IntPolynomial> expected_annihilator;
  KnowledgeTable knowledge;
};

std::vector<VerifyCheck> run_verify(const VerifyOptions& options);

}  // namespace nimrep
