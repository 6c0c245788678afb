#include "holobrace/holomorph.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "holobrace/error.hpp"

namespace holobrace {

HolElement hol_identity(const GroupSpec& group) {
  return {aut_identity(group), group.identity()};
}

Element hol_apply(const GroupSpec& group, const HolElement& x, const Element& g) {
  return add(group, aut_apply(group, x.aut, g), x.trans);
}

HolElement hol_compose(const GroupSpec& group, const HolElement& x, const HolElement& y) {
  return {aut_compose(x.aut, y.aut), add(group, aut_apply(group, x.aut, y.trans), x.trans)};
}

HolElement hol_invert(const GroupSpec& group, const HolElement& x) {
  Automorphism ai = aut_invert(x.aut);
  Element t = neg(group, aut_apply(group, ai, x.trans));
  return {std::move(ai), t};
}

HolElement hol_power(const GroupSpec& group, const HolElement& x, std::uint64_t k) {
  HolElement result = hol_identity(group);
  HolElement base = x;
  while (k > 0) {
    if (k & 1) result = hol_compose(group, result, base);
    base = hol_compose(group, base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t hol_order(const GroupSpec& group, const HolElement& x) {
  const HolElement id = hol_identity(group);
  HolElement cur = x;
  std::uint64_t k = 1;
  while (cur != id) {
    cur = hol_compose(group, cur, x);
    if (++k > aut_group_order(group) * group.order()) {
      throw InternalError("element order exceeds the group order");
    }
  }
  return k;
}

std::uint64_t hol_encode(const GroupSpec& group, const HolElement& x) {
  if (!aut_is_valid(group, x.aut)) throw InvalidInput("not an automorphism of " + group.name());
  return aut_code(x.aut) * group.order() + group.index_of(x.trans);
}

HolElement hol_decode(const GroupSpec& group, std::uint64_t code) {
  const std::uint64_t n = group.order();
  if (code / n >= aut_code_radix(group)) throw InvalidInput("holomorph code out of range");
  HolElement x{aut_decode(group, code / n), group.element_at(code % n)};
  if (!aut_is_valid(group, x.aut)) {
    throw InvalidInput("code " + std::to_string(code) + " is not an element of Hol(" +
                       group.name() + ")");
  }
  return x;
}

OrderBound exponent_bound(const GroupSpec& group, std::uint32_t p) {
  const PrimeBlock* b = group.block(p);
  if (b == nullptr) return {};
  int t = 0;
  while (ipow(p, static_cast<unsigned>(t)) < b->rank() + 1) ++t;
  OrderBound ob;
  ob.exponent = t + b->top_exponent() - 1;
  ob.bound = ipow(p, static_cast<unsigned>(ob.exponent));
  return ob;
}

std::map<std::uint64_t, std::uint64_t> order_spectrum(const GroupSpec& group,
                                                      const EngineOptions& opts) {
  const std::uint64_t hol = aut_group_order(group) * group.order();
  if (hol > opts.cap) {
    throw CapacityError("|Hol(" + group.name() + ")| = " + std::to_string(hol) +
                        " exceeds the cap " + std::to_string(opts.cap));
  }
  const HolTable t(enumerate_aut(group, opts.cap));
  const unsigned workers = std::max(1u, std::min(opts.resolved_workers(), t.aut_count()));
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint32_t a = w; a < t.aut_count(); a += workers) {
        const std::uint32_t oa = t.aut_order(a);
        for (std::uint32_t v = 0; v < t.points(); ++v) {
          // X^{ord A} is the translation by X^{ord A}(0).
          std::uint32_t pt = 0;
          for (std::uint32_t i = 0; i < oa; ++i) pt = t.act({a, v}, pt);
          ++partial[w][std::uint64_t{oa} * t.add_order(pt)];
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& m : partial) {
    for (const auto& [k, c] : m) out[k] += c;
  }
  return out;
}

HolTable::HolTable(AutGroup aut) : aut_(std::move(aut)) {
  const GroupSpec& g = aut_.group();
  if (g.order() > kMaxPoints) {
    throw CapacityError("indexed holomorph supports |N| <= " + std::to_string(kMaxPoints) +
                        ", got " + std::to_string(g.order()));
  }
  n_ = static_cast<std::uint32_t>(g.order());
  const std::size_t nf = g.num_factors();
  const auto& f = g.factors();

  coords_.resize(std::size_t{n_} * nf);
  for (std::uint32_t x = 0; x < n_; ++x) {
    const Element e = g.element_at(x);
    for (std::size_t i = 0; i < nf; ++i) coords_[x * nf + i] = e[i];
  }
  neg_.resize(n_);
  add_order_.resize(n_);
  for (std::uint32_t x = 0; x < n_; ++x) {
    const Element e = g.element_at(x);
    neg_[x] = static_cast<std::uint32_t>(g.index_of(holobrace::neg(g, e)));
    add_order_[x] = static_cast<std::uint32_t>(element_order(g, e));
  }
  if (std::uint64_t{n_} * n_ <= (std::uint64_t{1} << 22)) {
    add_.resize(std::size_t{n_} * n_);
    for (std::uint32_t x = 0; x < n_; ++x) {
      for (std::uint32_t y = 0; y < n_; ++y) add_[std::size_t{x} * n_ + y] = add_slow(x, y);
    }
  }
  for (std::size_t i = 0; i < nf; ++i) {
    Element e = g.identity();
    e[i] = 1 % f[i];
    basis_.push_back(static_cast<std::uint32_t>(g.index_of(e)));
  }

  const std::uint32_t count = aut_count();
  perms_.resize(std::size_t{count} * n_);
  codes_.resize(count);
  for (std::uint32_t a = 0; a < count; ++a) {
    codes_[a] = aut_code(aut_[a]);
    // Linear extension from the basis images.
    std::vector<Element> img;
    for (const std::uint32_t b : basis_) img.push_back(aut_apply(g, aut_[a], g.element_at(b)));
    std::uint32_t* row = &perms_[std::size_t{a} * n_];
    for (std::uint32_t x = 0; x < n_; ++x) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < nf; ++i) {
        const std::uint32_t im = static_cast<std::uint32_t>(g.index_of(img[i]));
        for (std::uint32_t k = 0; k < coords_[x * nf + i]; ++k) acc = add(acc, im);
      }
      row[x] = acc;
    }
  }
  const std::int64_t id = aut_.find(aut_identity(g));
  if (id < 0) throw InternalError("automorphism list lacks the identity");
  id_ = static_cast<std::uint32_t>(id);

  if (count <= 1024) {
    mul_.resize(std::size_t{count} * count);
    std::vector<std::uint32_t> images(nf);
    for (std::uint32_t a = 0; a < count; ++a) {
      for (std::uint32_t b = 0; b < count; ++b) {
        for (std::size_t i = 0; i < nf; ++i) images[i] = apply(a, apply(b, basis_[i]));
        mul_[std::size_t{a} * count + b] = find_by_images(images.data());
      }
    }
  }

  inv_.resize(count);
  order_.resize(count);
  square_.resize(count);
  std::vector<std::uint32_t> inverse_perm(n_), images(nf);
  for (std::uint32_t a = 0; a < count; ++a) {
    const std::uint32_t* p = perm(a);
    for (std::uint32_t x = 0; x < n_; ++x) inverse_perm[p[x]] = x;
    for (std::size_t i = 0; i < nf; ++i) images[i] = inverse_perm[basis_[i]];
    inv_[a] = find_by_images(images.data());
    std::uint64_t ord = 1;
    std::vector<char> seen(n_, 0);
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (seen[x]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t y = x; !seen[y]; y = p[y]) {
        seen[y] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    order_[a] = static_cast<std::uint32_t>(ord);
    square_[a] = aut_mul(a, a);
    roots_[square_[a]].push_back(a);
  }
}

std::uint32_t HolTable::add_slow(std::uint32_t x, std::uint32_t y) const {
  const auto& f = group().factors();
  const std::size_t nf = f.size();
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < nf; ++i) {
    idx = idx * f[i] + (coords_[x * nf + i] + coords_[y * nf + i]) % f[i];
  }
  return static_cast<std::uint32_t>(idx);
}

std::uint32_t HolTable::find_by_images(const std::uint32_t* images) const {
  // Column j of a block matrix is the image of that block's j-th unit vector.
  const std::size_t nf = group().num_factors();
  std::uint64_t code = 0;
  for (const auto& b : group().blocks()) {
    const std::size_t r = b.rank();
    std::uint64_t bc = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint64_t mod = group().factors()[b.offset + i];
      for (std::size_t j = 0; j < r; ++j) {
        bc = bc * mod + coords_[std::size_t{images[b.offset + j]} * nf + b.offset + i];
      }
    }
    std::uint64_t radix = 1;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) radix *= group().factors()[b.offset + i];
    }
    code = code * radix + bc;
  }
  const std::int64_t k = aut_.find(code);
  if (k < 0) throw InternalError("product left the automorphism list");
  return static_cast<std::uint32_t>(k);
}

std::uint32_t HolTable::aut_mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_.empty()) return mul_[std::size_t{a} * aut_count() + b];
  std::uint32_t images[Element::kMaxFactors];
  for (std::size_t i = 0; i < basis_.size(); ++i) images[i] = apply(a, apply(b, basis_[i]));
  return find_by_images(images);
}

const std::vector<std::uint32_t>& HolTable::square_roots(std::uint32_t a) const {
  static const std::vector<std::uint32_t> kEmpty;
  const auto it = roots_.find(a);
  return it == roots_.end() ? kEmpty : it->second;
}

HolTable::Idx HolTable::power(Idx x, std::uint64_t k) const {
  Idx result = identity();
  while (k > 0) {
    if (k & 1) result = mul(result, x);
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

std::uint64_t HolTable::order(Idx x) const {
  const std::uint32_t oa = aut_order(x.aut);
  std::uint32_t pt = 0;
  for (std::uint32_t i = 0; i < oa; ++i) pt = act(x, pt);
  return std::uint64_t{oa} * add_order(pt);
}

HolTable::Idx HolTable::decode(std::uint64_t code) const {
  const std::int64_t a = aut_.find(code / n_);
  if (a < 0) {
    throw InvalidInput("code " + std::to_string(code) + " is not an element of Hol(" +
                       group().name() + ")");
  }
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(code % n_)};
}

HolElement HolTable::to_value(Idx x) const {
  return {aut_[x.aut], group().element_at(x.trans)};
}

HolTable::Idx HolTable::from_value(const HolElement& x) const {
  const std::int64_t a = aut_.find(x.aut);
  if (a < 0) throw InvalidInput("not an automorphism of " + group().name());
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(group().index_of(x.trans))};
}

}  // namespace holobrace
