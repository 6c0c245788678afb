#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "holobrace/abelian.hpp"
#include "holobrace/config.hpp"
#include "holobrace/holomorph.hpp"
#include "holobrace/presentations.hpp"

namespace holobrace {

// A regular subgroup of Hol(N): sorted hol_encode() values of its elements,
// plus x, y witnessing the presentation of `kind`.
struct RegularSubgroup {
  GroupSpec group;
  std::vector<std::uint64_t> elements;
  TargetKind kind;
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  std::vector<HolElement> decoded() const;

  friend bool operator<(const RegularSubgroup& a, const RegularSubgroup& b) {
    return a.elements < b.elements;
  }
};

struct ConjugacyClass {
  RegularSubgroup representative;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
};

struct Census {
  GroupSpec group;
  TargetKind kind;
  std::vector<ConjugacyClass> classes;
  std::uint64_t c = 0;
  std::uint64_t r = 0;
  // "full", "sylow", "structured", "reduction".
  std::string path;
};

// True iff the translation parts of `elems` exhaust N. Throws InvalidInput
// if |elems| != |N|.
bool is_regular(const GroupSpec& group, const std::vector<HolElement>& elems);

// Subgroup generated by `gens`, sorted by encoding. Throws CapacityError once
// it exceeds `cap` elements.
std::vector<HolElement> generate_closure(const GroupSpec& group, const std::vector<HolElement>& gens,
                                         std::uint64_t cap);

// Search and classification over one N. Builds Aut(N) and the indexed
// holomorph on first use.
class Enumerator {
 public:
  explicit Enumerator(GroupSpec group, EngineOptions opts = {});
  ~Enumerator();
  Enumerator(Enumerator&&) noexcept;
  Enumerator& operator=(Enumerator&&) noexcept;

  const GroupSpec& group() const { return group_; }
  const EngineOptions& options() const { return opts_; }
  const HolTable& table() const;

  // Full search below full_hol_limit, the Sylow path for larger 2-groups,
  // full search up to cap otherwise; CapacityError beyond that.
  std::vector<RegularSubgroup> find_regular(const TargetKind& kind) const;
  std::vector<RegularSubgroup> find_regular_full(const TargetKind& kind) const;
  // Search inside N x| P for P the unitriangular Sylow 2-subgroup of Aut(N),
  // then expand to Aut(N)-orbits. Requires a 2-group.
  std::vector<RegularSubgroup> find_regular_sylow(const TargetKind& kind) const;
  // Which path find_regular takes: "full" or "sylow".
  std::string path_for(const TargetKind& kind) const;

  // Aut(N)-orbits of the given subgroups, each with its least-key
  // representative, sorted by representative.
  std::vector<ConjugacyClass> classify(const std::vector<RegularSubgroup>& subgroups) const;
  Census census(const TargetKind& kind) const;

  RegularSubgroup conjugate(std::uint32_t alpha, const RegularSubgroup& s) const;
  std::vector<RegularSubgroup> orbit(const RegularSubgroup& s) const;
  // Number of automorphisms fixing s, by testing each one.
  std::uint64_t stabilizer_exhaustive(const RegularSubgroup& s) const;
  // Canonical-code subgroup from arbitrary elements; throws InvalidInput if not
  // a regular subgroup of the requested kind.
  RegularSubgroup make_subgroup(const std::vector<HolElement>& elems) const;

 private:
  struct Impl;
  GroupSpec group_;
  EngineOptions opts_;
  std::unique_ptr<Impl> impl_;
};

// Convenience wrapper around Enumerator.
std::vector<RegularSubgroup> find_regular(const GroupSpec& group, const TargetKind& kind,
                                          const EngineOptions& opts = {});

}  // namespace holobrace
