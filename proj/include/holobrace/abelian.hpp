#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace holobrace {

// An element of a finite abelian group: one reduced residue per cyclic factor.
class Element {
 public:
  static constexpr std::size_t kMaxFactors = 8;

  Element() = default;
  explicit Element(std::span<const std::uint32_t> residues);
  Element(std::initializer_list<std::uint32_t> residues);

  // n zero residues.
  static Element zeros(std::size_t n);

  std::size_t size() const { return size_; }
  std::uint32_t operator[](std::size_t i) const { return r_[i]; }
  std::uint32_t& operator[](std::size_t i) { return r_[i]; }
  std::span<const std::uint32_t> residues() const { return {r_.data(), size_}; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  std::array<std::uint32_t, kMaxFactors> r_{};
  std::uint8_t size_ = 0;
};

// The factors of one prime p inside a GroupSpec: exponents a_1 <= ... <= a_r,
// stored at factors()[offset .. offset + rank).
struct PrimeBlock {
  std::uint32_t p = 0;
  std::vector<int> exponents;
  std::size_t offset = 0;

  std::size_t rank() const { return exponents.size(); }
  int top_exponent() const { return exponents.back(); }

  friend bool operator==(const PrimeBlock&, const PrimeBlock&) = default;
};

// A finite abelian group given by prime-power invariant factors.
//
// Canonical factor order: odd primes ascending, the prime 2 last, exponents
// nondecreasing within a prime. Elements are indexed lexicographically over
// residue vectors with the first factor most significant.
class GroupSpec {
 public:
  // The trivial group.
  GroupSpec() = default;

  // Factors each order into prime powers and canonicalizes. Throws
  // InvalidInput on orders < 2.
  static GroupSpec from_orders(std::span<const std::uint64_t> orders);
  static GroupSpec from_orders(std::initializer_list<std::uint64_t> orders);

  // "c2xc8", "C3 x C2 x C4", "[3,2,8]"; case-insensitive, whitespace-tolerant.
  static GroupSpec parse(std::string_view text);

  // Direct product; factors are recanonicalized.
  static GroupSpec product(const GroupSpec& a, const GroupSpec& b);

  const std::vector<std::uint32_t>& factors() const { return factors_; }
  const std::vector<PrimeBlock>& blocks() const { return blocks_; }
  const PrimeBlock* block(std::uint32_t p) const;
  std::size_t num_factors() const { return factors_.size(); }

  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_p_group() const { return blocks_.size() == 1; }
  std::size_t rank(std::uint32_t p) const;
  std::uint64_t exponent(std::uint32_t p) const;

  // Odd part as an integer (1 for 2-groups).
  std::uint64_t odd_order() const;
  // Largest power of 2 dividing the order.
  std::uint64_t two_order() const;

  // "C2xC8"; "C1" for the trivial group.
  std::string name() const;
  // "C_2×C_8".
  std::string display_name() const;

  Element identity() const { return Element::zeros(factors_.size()); }
  bool contains(const Element& g) const;
  std::uint64_t index_of(const Element& g) const;
  Element element_at(std::uint64_t index) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  explicit GroupSpec(std::vector<std::pair<std::uint32_t, int>> prime_powers);

  std::vector<std::uint32_t> factors_;
  std::vector<PrimeBlock> blocks_;
  std::uint64_t order_ = 1;
};

// Componentwise arithmetic. Throw InvalidInput if an argument does not belong
// to `group`.
Element add(const GroupSpec& group, const Element& g, const Element& h);
Element neg(const GroupSpec& group, const Element& g);
Element sub(const GroupSpec& group, const Element& g, const Element& h);
Element scale(const GroupSpec& group, const Element& g, std::uint64_t k);
std::uint64_t element_order(const GroupSpec& group, const Element& g);

// N = N_s x N_2 with coordinate maps.
struct SylowSplit {
  GroupSpec odd;
  GroupSpec two;

  std::pair<Element, Element> split(const Element& g) const;
  Element combine(const Element& odd_part, const Element& two_part) const;
};

SylowSplit sylow_decompose(const GroupSpec& group);

// Every abelian group of the given order up to isomorphism. Within a prime,
// fewer factors come first, then lexicographic exponents.
std::vector<GroupSpec> abelian_groups(std::uint64_t order);

// Number-theory helpers shared across modules.
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace holobrace
