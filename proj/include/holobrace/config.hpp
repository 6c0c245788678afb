#pragma once

#include <cstdint>

namespace holobrace {

// Budgets shared by the enumeration code paths.
struct EngineOptions {
  // Max candidate matrices per prime block when enumerating Aut(N), and max
  // |Hol(N)| for exhaustive scans of the holomorph.
  std::uint64_t cap = std::uint64_t{1} << 21;
  // 2-groups whose holomorph is larger than this are searched inside the
  // Sylow 2-subgroup N x| P and expanded by Aut(N)-orbits.
  std::uint64_t full_hol_limit = std::uint64_t{1} << 16;
  // Stabilizers are counted by testing every automorphism up to this |Aut|;
  // above it, orbits are walked with a generating set instead.
  std::uint64_t exhaustive_stabilizer_limit = std::uint64_t{1} << 15;
  // 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;

  unsigned resolved_workers() const;

  // Defaults, with HOLOBRACE_CAP applied when set.
  static EngineOptions from_env();
};

}  // namespace holobrace
