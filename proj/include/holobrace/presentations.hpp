#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holobrace/abelian.hpp"
#include "holobrace/holomorph.hpp"

namespace holobrace {

enum class Kind { quaternion, dihedral };

// Q_{2^n s} = <x, y | x^{2^{n-1}s} = 1, yxy^-1 = x^-1, y^2 = x^{2^{n-2}s}>, and
// D_{2^n s} the same with y^2 = 1. n = 2, s = 1 gives Q4 = C4 and D4 = C2 x C2.
struct TargetKind {
  Kind kind = Kind::quaternion;
  int n = 2;
  std::uint64_t s = 1;

  // Throws InvalidInput unless n >= 2 and s is odd.
  TargetKind() = default;
  TargetKind(Kind k, int n, std::uint64_t s = 1);

  std::uint64_t order() const { return (std::uint64_t{1} << n) * s; }
  // Order of x.
  std::uint64_t m() const { return order() / 2; }
  bool is_quaternion() const { return kind == Kind::quaternion; }
  // Q8 s and D4 s, where the odd reduction picks up a factor 3.
  bool exceptional() const { return (kind == Kind::quaternion && n == 3) || (kind == Kind::dihedral && n == 2); }
  TargetKind two_part() const { return TargetKind(kind, n, 1); }

  // "Q16", "D24".
  std::string name() const;
  // "Q_16"; the degenerate cases print as "C_4" and "C_2×C_2".
  std::string display_name() const;
  // "q16", "D24": kind letter plus order.
  static TargetKind parse(std::string_view text);
  // The target of this kind with the given order. Throws InvalidInput if the
  // order is not 2^n s with n >= 2.
  static TargetKind of_order(Kind k, std::uint64_t order);

  friend bool operator==(const TargetKind&, const TargetKind&) = default;
};

// A finite group by its Cayley table; element 0 is not assumed to be the
// identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // mul[i * size + j] = i * j. Throws InvalidInput if the table is not a group.
  FiniteGroup(std::uint32_t size, std::vector<std::uint32_t> mul);

  std::uint32_t size() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[std::size_t{a} * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
  std::uint64_t order(std::uint32_t a) const;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t id_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

// x, y satisfying one of the presentations above.
struct Recognition {
  TargetKind kind;
  std::uint32_t x = 0;
  std::uint32_t y = 0;
};

// Searches for presentation witnesses, quaternion first. Empty if the group
// is neither quaternion nor dihedral (including orders below 4).
std::optional<Recognition> recognize(const FiniteGroup& g);

// Cayley table of a set of holomorph elements, in the order given. Throws
// InvalidInput if the set is not a subgroup.
FiniteGroup subgroup_table(const GroupSpec& group, const std::vector<HolElement>& elems);
std::optional<TargetKind> classify_subgroup(const GroupSpec& group, const std::vector<HolElement>& elems);

// Elements x^i y^j ordered as i + m j.
FiniteGroup presented_group(const TargetKind& k);

// |Aut(G)| for the presented group.
std::uint64_t aut_order(const TargetKind& k);

// Abelian groups of order 2^n that can carry a quaternion or dihedral brace.
std::vector<GroupSpec> admissible_types(int n);

}  // namespace holobrace
