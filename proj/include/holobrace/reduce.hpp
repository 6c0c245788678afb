#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "holobrace/enumerate.hpp"

namespace holobrace {

// A homomorphism tau: H -> Aut(N_s) with image {1, -1}, given by its kernel.
struct TauMap {
  RegularSubgroup domain;
  // Sorted codes of the index-2 kernel; a cyclic subgroup of order |H|/2.
  std::vector<std::uint64_t> kernel;

  bool inverts(std::uint64_t code) const;
};

// The maps tau for which N_s x| H is again quaternion or dihedral: one per
// cyclic subgroup of index 2. Three for Q8 and C2 x C2, one otherwise.
std::vector<TauMap> tau_set(const RegularSubgroup& h);

// The regular subgroup {(a, tau_b, h_b)} of Hol(N_s x N_2), where h_b is the
// element of H with translation b. N_s must be cyclic of odd order; s = 1
// returns H.
RegularSubgroup semidirect_subgroup(const RegularSubgroup& h, const TauMap& tau, const GroupSpec& odd);

// Inverse of semidirect_subgroup: the pair (H, tau) of a regular subgroup of
// Hol(N) with N_s cyclic.
std::pair<RegularSubgroup, TauMap> split_subgroup(const RegularSubgroup& g);

// Census of a 2-group through the family solver when one applies, else the
// generic engine.
Census two_part_census(const GroupSpec& two, const TargetKind& kind, const EngineOptions& opts = {});

// Census of N = N_s x N_2 from the census of N_2. The exceptional kinds (Q8,
// D4) take their classes from a direct search over C3 x N_2. Path
// "reduction". `base`, if given, must be the census of (N_2, J_2).
Census reduce_census(const GroupSpec& group, const TargetKind& kind, const EngineOptions& opts = {},
                     const Census* base = nullptr);

// (r, c) of reduce_census.
std::pair<std::uint64_t, std::uint64_t> reduce_counts(const GroupSpec& group, const TargetKind& kind,
                                                      const EngineOptions& opts = {});

}  // namespace holobrace
