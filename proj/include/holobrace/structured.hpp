#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holobrace/enumerate.hpp"

namespace holobrace {

enum class Family { cyclic, rank2 };

// One generator pair X = (A, v), Y = (B, w) of a regular subgroup, with the
// scalar parameters of its family:
//   cyclic (N = C_{2^n}):           alpha, beta, v, w
//   rank2  (N = C2 x C_{2^{n-1}}):  a, b, r, s, alpha, beta, v1, v2, w1, w2
// where A = [[1, a], [2^{n-2} b, alpha]] and B = [[1, r], [2^{n-2} s, beta]].
struct StructuredGeneratorPair {
  Family family = Family::cyclic;
  int n = 0;
  Kind kind = Kind::quaternion;
  std::vector<std::uint64_t> params;
  HolElement x;
  HolElement y;

  static const std::vector<std::string>& param_names(Family f);
};

struct StructuredResult {
  Family family = Family::cyclic;
  int n = 0;
  TargetKind kind;
  // One pair per solution subgroup (cyclic) or per fundamental subgroup (rank2).
  std::vector<StructuredGeneratorPair> pairs;
  // Every regular subgroup, sorted.
  std::vector<RegularSubgroup> subgroups;
  std::vector<ConjugacyClass> classes;
  std::uint64_t r = 0;
  std::uint64_t c = 0;
};

// Solve the congruence system for C_{2^n} over (alpha, beta, v, w).
// Returns nullopt for n < 4, where the generic engine applies.
std::optional<StructuredResult> solve_cyclic(int n, Kind kind);

// Solve the normalized system for C2 x C_{2^{n-1}}: the 8 fundamental
// subgroups, their Aut-orbits, and the X-matrix count. Returns nullopt for
// n < 5.
std::optional<StructuredResult> solve_rank2(int n, Kind kind);

// The family solver for N when one applies, as a Census with path
// "structured".
std::optional<Census> structured_census(const GroupSpec& group, const TargetKind& kind);

}  // namespace holobrace
