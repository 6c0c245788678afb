#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "holobrace/abelian.hpp"

namespace holobrace {

// An endomorphism of the abelian p-group Z/p^{a_1} x ... x Z/p^{a_r}, stored
// as an r x r matrix whose row i lives in Z/p^{a_i}. Entry (i, j) is divisible
// by p^{a_i - a_j} whenever a_i > a_j; these are exactly the matrices that
// induce well-defined maps, and the reduced representative is unique.
class EndoMatrix {
 public:
  static constexpr std::size_t kMaxRank = 6;

  EndoMatrix() = default;
  // Zero endomorphism.
  EndoMatrix(std::uint32_t p, std::span<const int> exponents);

  static EndoMatrix identity(std::uint32_t p, std::span<const int> exponents);
  // Entries must already satisfy the divisibility condition; they are reduced
  // mod the row modulus. Throws InvalidInput otherwise.
  static EndoMatrix from_rows(std::uint32_t p, std::span<const int> exponents,
                              const std::vector<std::vector<std::uint64_t>>& rows);
  // Image of an integer matrix under the ring surjection onto End(N): entries
  // are taken mod p^{a_r}, (i, j) must be divisible by p^{max(0, a_i - a_j)}.
  static EndoMatrix from_ring(std::uint32_t p, std::span<const int> exponents,
                              const std::vector<std::vector<std::uint64_t>>& entries);

  std::uint32_t p() const { return p_; }
  std::size_t rank() const { return rank_; }
  int exponent(std::size_t i) const { return exps_[i]; }
  std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + rank_}; }
  std::uint32_t row_modulus(std::size_t i) const { return mods_[i]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return e_[i * kMaxRank + j]; }

  // Sets entry (i, j) after reduction; throws InvalidInput if it breaks the
  // divisibility condition.
  void set(std::size_t i, std::size_t j, std::uint64_t value);

  bool same_shape(const EndoMatrix& other) const;

  // Mixed-radix packing of the entries, row-major, radix = row modulus.
  std::uint64_t code() const;
  // Number of distinct codes (product of the radices). Throws CapacityError
  // on 64-bit overflow.
  std::uint64_t code_radix() const;
  static EndoMatrix decode(std::uint32_t p, std::span<const int> exponents, std::uint64_t code);

  std::string to_json() const;

  friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;
  friend auto operator<=>(const EndoMatrix&, const EndoMatrix&) = default;

 private:
  std::uint32_t p_ = 0;
  std::uint8_t rank_ = 0;
  std::array<std::uint8_t, kMaxRank> exps_{};
  std::array<std::uint32_t, kMaxRank> mods_{};
  std::array<std::uint32_t, kMaxRank * kMaxRank> e_{};
};

// Matrix-vector product with row i taken mod p^{a_i}. `g` has one residue per
// factor of the p-group.
Element endo_apply(const EndoMatrix& m, const Element& g);
EndoMatrix endo_compose(const EndoMatrix& outer, const EndoMatrix& inner);
EndoMatrix endo_add(const EndoMatrix& a, const EndoMatrix& b);
// Unit iff the reduction mod p is invertible over F_p.
bool is_unit(const EndoMatrix& m);
// Throws DomainError for non-units.
EndoMatrix invert(const EndoMatrix& m);
EndoMatrix endo_power(const EndoMatrix& m, std::uint64_t k);
// Reduction mod p is upper unitriangular.
bool is_unipotent_upper(const EndoMatrix& m);

// Number of candidate matrices (divisibility-respecting, reduced) for one
// prime block.
std::uint64_t candidate_count(std::uint32_t p, std::span<const int> exponents);
// Every unit of the block, sorted by code. Throws CapacityError when the
// candidate space exceeds `cap`.
std::vector<EndoMatrix> enumerate_units(std::uint32_t p, std::span<const int> exponents,
                                        std::uint64_t cap);

// |Aut| of one abelian p-group block, by the Hillar-Rhea closed form.
std::uint64_t aut_order_p_block(std::uint32_t p, std::span<const int> exponents);
// |Aut(N)| as the product over prime blocks.
std::uint64_t aut_group_order(const GroupSpec& group);

// An automorphism of a possibly mixed-order N: one EndoMatrix per prime block,
// in GroupSpec block order.
struct Automorphism {
  std::vector<EndoMatrix> blocks;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

Automorphism aut_identity(const GroupSpec& group);
// Multiplication by k on every factor (k must be a unit mod every prime).
Automorphism aut_scalar(const GroupSpec& group, std::uint64_t k);
Element aut_apply(const GroupSpec& group, const Automorphism& a, const Element& g);
Automorphism aut_compose(const Automorphism& outer, const Automorphism& inner);
Automorphism aut_invert(const Automorphism& a);
bool aut_is_valid(const GroupSpec& group, const Automorphism& a);
std::uint64_t aut_code(const Automorphism& a);
std::uint64_t aut_code_radix(const GroupSpec& group);
Automorphism aut_decode(const GroupSpec& group, std::uint64_t code);
std::string aut_to_json(const Automorphism& a);

// Aut(N) listed exhaustively in canonical (code) order.
class AutGroup {
 public:
  AutGroup() = default;
  AutGroup(GroupSpec group, std::vector<Automorphism> elements);

  const GroupSpec& group() const { return group_; }
  const std::vector<Automorphism>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  const Automorphism& operator[](std::size_t i) const { return elements_[i]; }

  // Index of the element with this code, or -1.
  std::int64_t find(std::uint64_t code) const;
  std::int64_t find(const Automorphism& a) const { return find(aut_code(a)); }

  // Greedy generating set: walk elements in canonical order, keep each one
  // not already in the closure of those kept. Also proves closure: throws
  // InternalError if a product leaves the list.
  const std::vector<std::size_t>& generators() const;

 private:
  GroupSpec group_;
  std::vector<Automorphism> elements_;
  std::unordered_map<std::uint64_t, std::size_t> by_code_;
  mutable std::vector<std::size_t> generators_;
};

// Throws CapacityError naming the offending prime block if any block's
// candidate space exceeds `cap`.
AutGroup enumerate_aut(const GroupSpec& group, std::uint64_t cap);

// Units of a p-group N whose reduction mod p is upper unitriangular; a Sylow
// p-subgroup of Aut(N).
std::vector<EndoMatrix> sylow_p_aut(const GroupSpec& group, std::uint32_t p, std::uint64_t cap);

}  // namespace holobrace
