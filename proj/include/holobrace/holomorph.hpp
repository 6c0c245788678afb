#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "holobrace/abelian.hpp"
#include "holobrace/config.hpp"
#include "holobrace/endo.hpp"

namespace holobrace {

// (A, v) acts on N by x -> A(x) + v.
struct HolElement {
  Automorphism aut;
  Element trans;

  friend bool operator==(const HolElement&, const HolElement&) = default;
  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

HolElement hol_identity(const GroupSpec& group);
Element hol_apply(const GroupSpec& group, const HolElement& x, const Element& g);
// (A, v)(B, w) = (AB, A(w) + v): apply y first, then x.
HolElement hol_compose(const GroupSpec& group, const HolElement& x, const HolElement& y);
HolElement hol_invert(const GroupSpec& group, const HolElement& x);
HolElement hol_power(const GroupSpec& group, const HolElement& x, std::uint64_t k);
// Smallest k >= 1 with x^k = 1, by direct iteration.
std::uint64_t hol_order(const GroupSpec& group, const HolElement& x);

// aut_code(A) * |N| + index_of(v).
std::uint64_t hol_encode(const GroupSpec& group, const HolElement& x);
HolElement hol_decode(const GroupSpec& group, std::uint64_t code);

// Every p-element of Hol(N_p) has order dividing p^exponent, where
// exponent = ceil(log_p(rank + 1)) + top_exponent - 1.
struct OrderBound {
  int exponent = 0;
  std::uint64_t bound = 1;
};
OrderBound exponent_bound(const GroupSpec& group, std::uint32_t p);

// Element-order histogram of Hol(N). Throws CapacityError if |Hol(N)| exceeds
// opts.cap.
std::map<std::uint64_t, std::uint64_t> order_spectrum(const GroupSpec& group,
                                                      const EngineOptions& opts);

// Index-based holomorph: automorphisms are stored as permutations of the
// element indices of N, so products cost a few table lookups. Automorphism
// indices follow AutGroup's canonical order, hence sorting by key() agrees
// with sorting by hol_encode().
class HolTable {
 public:
  struct Idx {
    std::uint32_t aut = 0;
    std::uint32_t trans = 0;

    friend bool operator==(const Idx&, const Idx&) = default;
    friend auto operator<=>(const Idx&, const Idx&) = default;
  };

  static constexpr std::uint64_t kMaxPoints = 4096;

  explicit HolTable(AutGroup aut);

  const GroupSpec& group() const { return aut_.group(); }
  const AutGroup& aut_group() const { return aut_; }
  std::uint32_t points() const { return n_; }
  std::uint32_t aut_count() const { return static_cast<std::uint32_t>(aut_.order()); }
  std::uint64_t order() const { return std::uint64_t{n_} * aut_count(); }
  std::uint32_t identity_aut() const { return id_; }
  std::uint32_t zero() const { return 0; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    return add_.empty() ? add_slow(x, y) : add_[std::size_t{x} * n_ + y];
  }
  std::uint32_t neg(std::uint32_t x) const { return neg_[x]; }
  std::uint32_t apply(std::uint32_t a, std::uint32_t x) const {
    return perms_[std::size_t{a} * n_ + x];
  }
  const std::uint32_t* perm(std::uint32_t a) const { return &perms_[std::size_t{a} * n_]; }
  std::uint32_t add_order(std::uint32_t x) const { return add_order_[x]; }

  // a o b.
  std::uint32_t aut_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t aut_inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t aut_order(std::uint32_t a) const { return order_[a]; }
  std::uint32_t aut_square(std::uint32_t a) const { return square_[a]; }
  // Automorphisms b with b o b == a.
  const std::vector<std::uint32_t>& square_roots(std::uint32_t a) const;
  // Indices of N's unit vectors; two automorphisms agree iff they agree here.
  const std::vector<std::uint32_t>& basis() const { return basis_; }

  Idx identity() const { return {id_, 0}; }
  Idx mul(Idx x, Idx y) const { return {aut_mul(x.aut, y.aut), add(apply(x.aut, y.trans), x.trans)}; }
  Idx inv(Idx x) const {
    const std::uint32_t ai = aut_inv(x.aut);
    return {ai, neg(apply(ai, x.trans))};
  }
  Idx power(Idx x, std::uint64_t k) const;
  std::uint32_t act(Idx x, std::uint32_t p) const { return add(apply(x.aut, p), x.trans); }
  std::uint64_t order(Idx x) const;
  // alpha x alpha^-1 for alpha in Aut(N).
  Idx conj(std::uint32_t alpha, Idx x) const {
    return {aut_mul(aut_mul(alpha, x.aut), aut_inv(alpha)), apply(alpha, x.trans)};
  }

  std::uint64_t key(Idx x) const { return std::uint64_t{x.aut} * n_ + x.trans; }
  Idx from_key(std::uint64_t k) const {
    return {static_cast<std::uint32_t>(k / n_), static_cast<std::uint32_t>(k % n_)};
  }
  std::uint64_t encode(Idx x) const { return codes_[x.aut] * n_ + x.trans; }
  // Throws InvalidInput for codes outside Hol(N).
  Idx decode(std::uint64_t code) const;
  HolElement to_value(Idx x) const;
  Idx from_value(const HolElement& x) const;

 private:
  std::uint32_t add_slow(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t find_by_images(const std::uint32_t* images) const;

  AutGroup aut_;
  std::uint32_t n_ = 0;
  std::uint32_t id_ = 0;
  std::vector<std::uint32_t> coords_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_order_;
  std::vector<std::uint32_t> basis_;
  std::vector<std::uint32_t> perms_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> square_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> roots_;
};

}  // namespace holobrace
