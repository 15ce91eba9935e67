#pragma once

// Internal consistency suites shared by the CLI check modes and the tests.

#include "confhom/assembler.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace confhom {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Seeded random problems: dim M <= 3, n <= 3, label classes in degrees
/// 2..4, fields cycling through Q, F2, F3, F5.
std::vector<ProblemSpec> random_coherence_specs(std::uint64_t seed, int count, int max_degree);

/// theorem_a == theorem_b bigraded-exactly (weight cap floor(D/2) for both).
CheckResult check_ab_coherence(const ProblemSpec& spec);

/// The weight-1 row of `series` equals the reduced homology of M/M0 ^ X.
CheckResult check_weight_one(const ProblemSpec& spec, const BiSeries& series);

std::string describe(const ProblemSpec& spec);

}  // namespace confhom
