#include "holobrace/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "holobrace/error.hpp"

namespace holobrace {

Element::Element(std::span<const std::uint32_t> residues) {
  if (residues.size() > kMaxFactors) {
    throw InvalidInput("too many cyclic factors (max " +
                       std::to_string(kMaxFactors) + ")");
  }
  std::copy(residues.begin(), residues.end(), r_.begin());
  size_ = static_cast<std::uint8_t>(residues.size());
}

Element::Element(std::initializer_list<std::uint32_t> residues)
    : Element(std::span<const std::uint32_t>(residues.begin(), residues.size())) {}

Element Element::zeros(std::size_t n) {
  if (n > kMaxFactors) {
    throw InvalidInput("too many cyclic factors (max " +
                       std::to_string(kMaxFactors) + ")");
  }
  Element e;
  e.size_ = static_cast<std::uint8_t>(n);
  return e;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

namespace {

// Odd primes ascending, then 2.
bool prime_before(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  if (a == 2) return false;
  if (b == 2) return true;
  return a < b;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::pair<std::uint32_t, int>> prime_powers) {
  std::sort(prime_powers.begin(), prime_powers.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return prime_before(x.first, y.first);
    return x.second < y.second;
  });
  for (const auto& [p, e] : prime_powers) {
    if (blocks_.empty() || blocks_.back().p != p) {
      blocks_.push_back(PrimeBlock{p, {}, factors_.size()});
    }
    blocks_.back().exponents.push_back(e);
    const std::uint64_t f = ipow(p, static_cast<unsigned>(e));
    if (f > 0xffffffffu) throw CapacityError("cyclic factor too large: " + std::to_string(f));
    factors_.push_back(static_cast<std::uint32_t>(f));
    if (order_ > (std::uint64_t{1} << 40) / f) throw CapacityError("group order too large");
    order_ *= f;
  }
  if (factors_.size() > Element::kMaxFactors) {
    throw CapacityError("too many cyclic factors (max " +
                        std::to_string(Element::kMaxFactors) + ")");
  }
}

GroupSpec GroupSpec::from_orders(std::span<const std::uint64_t> orders) {
  std::vector<std::pair<std::uint32_t, int>> pp;
  for (const std::uint64_t n : orders) {
    if (n < 2) {
      throw InvalidInput("cyclic factor order must be at least 2, got " + std::to_string(n));
    }
    for (const auto& [p, e] : factorize(n)) {
      pp.emplace_back(static_cast<std::uint32_t>(p), e);
    }
  }
  return GroupSpec(std::move(pp));
}

GroupSpec GroupSpec::from_orders(std::initializer_list<std::uint64_t> orders) {
  return from_orders(std::span<const std::uint64_t>(orders.begin(), orders.size()));
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s;
  for (const char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (s.empty()) throw InvalidInput("empty group spec");

  auto parse_int = [&](std::string_view tok) {
    std::uint64_t v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (tok.empty() || ec != std::errc() || ptr != end) {
      throw InvalidInput("bad group spec '" + std::string(text) + "'");
    }
    return v;
  };

  std::vector<std::uint64_t> orders;
  if (s.front() == '[') {
    if (s.back() != ']') throw InvalidInput("bad group spec '" + std::string(text) + "'");
    std::string_view body(s.data() + 1, s.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::size_t stop = comma == std::string_view::npos ? body.size() : comma;
      orders.push_back(parse_int(body.substr(start, stop - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    std::string_view rest(s);
    while (true) {
      if (rest.empty() || rest.front() != 'c') {
        throw InvalidInput("bad group spec '" + std::string(text) + "'");
      }
      rest.remove_prefix(1);
      const std::size_t x = rest.find('x');
      orders.push_back(parse_int(rest.substr(0, x)));
      if (x == std::string_view::npos) break;
      rest.remove_prefix(x + 1);
    }
  }
  return from_orders(orders);
}

GroupSpec GroupSpec::product(const GroupSpec& a, const GroupSpec& b) {
  std::vector<std::pair<std::uint32_t, int>> pp;
  for (const auto* g : {&a, &b}) {
    for (const auto& blk : g->blocks_) {
      for (const int e : blk.exponents) pp.emplace_back(blk.p, e);
    }
  }
  return GroupSpec(std::move(pp));
}

const PrimeBlock* GroupSpec::block(std::uint32_t p) const {
  for (const auto& b : blocks_) {
    if (b.p == p) return &b;
  }
  return nullptr;
}

std::size_t GroupSpec::rank(std::uint32_t p) const {
  const auto* b = block(p);
  return b ? b->rank() : 0;
}

std::uint64_t GroupSpec::exponent(std::uint32_t p) const {
  const auto* b = block(p);
  return b ? ipow(p, static_cast<unsigned>(b->top_exponent())) : 1;
}

std::uint64_t GroupSpec::odd_order() const {
  std::uint64_t o = order_;
  while (o % 2 == 0) o /= 2;
  return o;
}

std::uint64_t GroupSpec::two_order() const { return order_ / odd_order(); }

std::string GroupSpec::name() const {
  if (factors_.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += "C" + std::to_string(factors_[i]);
  }
  return out;
}

std::string GroupSpec::display_name() const {
  if (factors_.empty()) return "C_1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "×";
    out += "C_" + std::to_string(factors_[i]);
  }
  return out;
}

bool GroupSpec::contains(const Element& g) const {
  if (g.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g[i] >= factors_[i]) return false;
  }
  return true;
}

namespace {

void require_member(const GroupSpec& group, const Element& g) {
  if (!group.contains(g)) {
    throw InvalidInput("element does not belong to " + group.name());
  }
}

}  // namespace

std::uint64_t GroupSpec::index_of(const Element& g) const {
  require_member(*this, g);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g[i];
  return idx;
}

Element GroupSpec::element_at(std::uint64_t index) const {
  if (index >= order_) throw InvalidInput("element index out of range");
  Element g = identity();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g[i] = static_cast<std::uint32_t>(index % factors_[i]);
    index /= factors_[i];
  }
  return g;
}

Element add(const GroupSpec& group, const Element& g, const Element& h) {
  require_member(group, g);
  require_member(group, h);
  Element out = g;
  const auto& f = group.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = static_cast<std::uint32_t>((std::uint64_t{g[i]} + h[i]) % f[i]);
  }
  return out;
}

Element neg(const GroupSpec& group, const Element& g) {
  require_member(group, g);
  Element out = g;
  const auto& f = group.factors();
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[i] == 0 ? 0 : f[i] - g[i];
  return out;
}

Element sub(const GroupSpec& group, const Element& g, const Element& h) {
  return add(group, g, neg(group, h));
}

Element scale(const GroupSpec& group, const Element& g, std::uint64_t k) {
  require_member(group, g);
  Element out = g;
  const auto& f = group.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = static_cast<std::uint32_t>((k % f[i]) * g[i] % f[i]);
  }
  return out;
}

std::uint64_t element_order(const GroupSpec& group, const Element& g) {
  require_member(group, g);
  std::uint64_t ord = 1;
  const auto& f = group.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint64_t oi = f[i] / std::gcd<std::uint64_t>(f[i], g[i]);
    ord = std::lcm(ord, oi);
  }
  return ord;
}

std::pair<Element, Element> SylowSplit::split(const Element& g) const {
  const std::size_t k = odd.num_factors();
  if (g.size() != k + two.num_factors()) throw InvalidInput("element shape mismatch");
  auto r = g.residues();
  return {Element(r.subspan(0, k)), Element(r.subspan(k))};
}

Element SylowSplit::combine(const Element& odd_part, const Element& two_part) const {
  if (!odd.contains(odd_part) || !two.contains(two_part)) {
    throw InvalidInput("element shape mismatch");
  }
  std::vector<std::uint32_t> r(odd_part.residues().begin(), odd_part.residues().end());
  r.insert(r.end(), two_part.residues().begin(), two_part.residues().end());
  return Element(r);
}

SylowSplit sylow_decompose(const GroupSpec& group) {
  std::vector<std::uint64_t> odd;
  std::vector<std::uint64_t> two;
  for (const std::uint32_t f : group.factors()) (f % 2 == 0 ? two : odd).push_back(f);
  return SylowSplit{GroupSpec::from_orders(odd), GroupSpec::from_orders(two)};
}

namespace {

void partitions(int left, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = min_part; part <= left; ++part) {
    cur.push_back(part);
    partitions(left - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> abelian_groups(std::uint64_t order) {
  if (order == 0) throw InvalidInput("group order must be positive");
  std::vector<std::vector<std::uint64_t>> lists{{}};
  for (const auto& [p, e] : factorize(order)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, 1, cur, parts);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : lists) {
      for (const auto& part : parts) {
        auto orders = base;
        for (const int k : part) orders.push_back(ipow(p, static_cast<unsigned>(k)));
        next.push_back(std::move(orders));
      }
    }
    lists = std::move(next);
  }
  std::vector<GroupSpec> out;
  for (const auto& l : lists) out.push_back(GroupSpec::from_orders(l));
  return out;
}

}  // namespace holobrace
