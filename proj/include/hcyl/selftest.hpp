#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hcyl/pretzel.hpp"

namespace hcyl {

struct SelftestOptions {
  bool fast = false;
  // Replaces hfk_top_rank inside the checks; used for fault injection.
  std::function<std::uint64_t(const WitnessKnot&)> rank_override;
};

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool passed() const;
  /// Name of the first failing check, or empty.
  std::string first_failure() const;
};

/// Runs the pretzel-box two-route oracle, the rank formula table, witness
/// verification for primes = 1 (mod 4) below 10^4 and a 25-row certificate.
/// `fast` shrinks the box and prime range.
SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace hcyl
