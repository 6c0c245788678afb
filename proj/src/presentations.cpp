#include "holobrace/presentations.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "holobrace/error.hpp"

namespace holobrace {

TargetKind::TargetKind(Kind k, int n_, std::uint64_t s_) : kind(k), n(n_), s(s_) {
  if (n < 2 || n > 40) throw InvalidInput("target exponent n must be between 2 and 40");
  if (s == 0 || s % 2 == 0) throw InvalidInput("odd part s must be odd");
}

std::string TargetKind::name() const {
  return std::string(kind == Kind::quaternion ? "Q" : "D") + std::to_string(order());
}

std::string TargetKind::display_name() const {
  if (n == 2 && s == 1) return kind == Kind::quaternion ? "C_4" : "C_2×C_2";
  return std::string(kind == Kind::quaternion ? "Q_" : "D_") + std::to_string(order());
}

TargetKind TargetKind::of_order(Kind k, std::uint64_t order) {
  int n = 0;
  while (order > 0 && order % 2 == 0) {
    order /= 2;
    ++n;
  }
  if (n < 2) throw InvalidInput("target order must be divisible by 4");
  return TargetKind(k, n, order);
}

TargetKind TargetKind::parse(std::string_view text) {
  std::string s;
  for (const char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (s.size() < 2 || (s[0] != 'q' && s[0] != 'd')) {
    throw InvalidInput("bad target '" + std::string(text) + "', expected e.g. q16 or d24");
  }
  std::uint64_t order = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data() + 1, end, order);
  if (ec != std::errc() || ptr != end) {
    throw InvalidInput("bad target '" + std::string(text) + "', expected e.g. q16 or d24");
  }
  return of_order(s[0] == 'q' ? Kind::quaternion : Kind::dihedral, order);
}

FiniteGroup::FiniteGroup(std::uint32_t size, std::vector<std::uint32_t> mul)
    : n_(size), mul_(std::move(mul)) {
  if (n_ == 0 || mul_.size() != std::size_t{n_} * n_) throw InvalidInput("bad Cayley table size");
  bool found = false;
  for (std::uint32_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n_ && ok; ++a) ok = this->mul(e, a) == a && this->mul(a, e) == a;
    if (ok) {
      id_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidInput("Cayley table has no identity");
  inv_.assign(n_, n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (this->mul(a, b) >= n_) throw InvalidInput("Cayley table entry out of range");
      if (this->mul(a, b) == id_) inv_[a] = b;
    }
    if (inv_[a] == n_) throw InvalidInput("Cayley table element without inverse");
  }
}

std::uint32_t FiniteGroup::power(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = id_;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t FiniteGroup::order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (std::uint32_t cur = a; cur != id_; cur = mul(cur, a)) ++k;
  return k;
}

std::optional<Recognition> recognize(const FiniteGroup& g) {
  const std::uint64_t size = g.size();
  if (size < 4 || size % 4 != 0) return std::nullopt;
  const std::uint64_t m = size / 2;
  for (const Kind kind : {Kind::quaternion, Kind::dihedral}) {
    const TargetKind target = TargetKind::of_order(kind, size);
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (g.order(x) != m) continue;
      std::vector<char> in_x(g.size(), 0);
      for (std::uint32_t c = g.identity(), i = 0; i < m; ++i, c = g.mul(c, x)) in_x[c] = 1;
      const std::uint32_t want_square = kind == Kind::quaternion ? g.power(x, m / 2) : g.identity();
      const std::uint32_t xinv = g.inv(x);
      for (std::uint32_t y = 0; y < g.size(); ++y) {
        if (in_x[y]) continue;
        if (g.mul(g.mul(y, x), g.inv(y)) != xinv) continue;
        if (g.mul(y, y) != want_square) continue;
        return Recognition{target, x, y};
      }
    }
  }
  return std::nullopt;
}

FiniteGroup subgroup_table(const GroupSpec& group, const std::vector<HolElement>& elems) {
  std::map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (!index.emplace(hol_encode(group, elems[i]), i).second) {
      throw InvalidInput("duplicate element in subgroup");
    }
  }
  const auto n = static_cast<std::uint32_t>(elems.size());
  std::vector<std::uint32_t> mul(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto it = index.find(hol_encode(group, hol_compose(group, elems[i], elems[j])));
      if (it == index.end()) throw InvalidInput("element set is not closed under composition");
      mul[std::size_t{i} * n + j] = it->second;
    }
  }
  return FiniteGroup(n, std::move(mul));
}

std::optional<TargetKind> classify_subgroup(const GroupSpec& group,
                                            const std::vector<HolElement>& elems) {
  if (elems.empty()) throw InvalidInput("empty element set");
  const auto r = recognize(subgroup_table(group, elems));
  if (!r) return std::nullopt;
  return r->kind;
}

FiniteGroup presented_group(const TargetKind& k) {
  const std::uint64_t m = k.m();
  const std::uint64_t size = 2 * m;
  if (size > 1u << 15) throw CapacityError("presented group too large for a Cayley table");
  const std::uint64_t y2 = k.is_quaternion() ? m / 2 : 0;
  std::vector<std::uint32_t> mul(size * size);
  for (std::uint64_t u = 0; u < size; ++u) {
    const std::uint64_t a = u % m, b = u / m;
    for (std::uint64_t v = 0; v < size; ++v) {
      const std::uint64_t c = v % m, d = v / m;
      // y x^c = x^-c y.
      std::uint64_t i = b == 0 ? (a + c) % m : (a + m - c) % m;
      std::uint64_t j = b ^ d;
      if (b == 1 && d == 1) i = (i + y2) % m;
      mul[u * size + v] = static_cast<std::uint32_t>(i + m * j);
    }
  }
  return FiniteGroup(static_cast<std::uint32_t>(size), std::move(mul));
}

std::uint64_t aut_order(const TargetKind& k) {
  if (k.s == 1) {
    if (k.is_quaternion() && k.n == 2) return 2;
    if (k.is_quaternion() && k.n == 3) return 24;
    if (!k.is_quaternion() && k.n == 2) return 6;
  }
  return (std::uint64_t{1} << (2 * k.n - 3)) * k.s * euler_phi(k.s);
}

std::vector<GroupSpec> admissible_types(int n) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  auto c = [](int e) { return std::uint64_t{1} << e; };
  std::vector<GroupSpec> out;
  out.push_back(GroupSpec::from_orders({c(n)}));
  out.push_back(GroupSpec::from_orders({2, c(n - 1)}));
  // C4 x C_{2^{n-2}} coincides with C2 x C4 at n = 3.
  if (n >= 4) out.push_back(GroupSpec::from_orders({4, c(n - 2)}));
  if (n >= 3) out.push_back(GroupSpec::from_orders({2, 2, c(n - 2)}));
  if (n >= 4) out.push_back(GroupSpec::from_orders({2, 2, 2, c(n - 3)}));
  return out;
}

}  // namespace holobrace
