#include "holobrace/endo.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "holobrace/error.hpp"

namespace holobrace {

namespace {

std::uint32_t pow32(std::uint32_t p, int e) {
  return static_cast<std::uint32_t>(ipow(p, static_cast<unsigned>(e)));
}

// Multiples of p^{a_i - a_j} when a_i > a_j, else 1.
std::uint32_t required_divisor(std::uint32_t p, int ai, int aj) {
  return ai > aj ? pow32(p, ai - aj) : 1;
}

void check_shape(std::uint32_t p, std::span<const int> exponents) {
  if (p < 2) throw InvalidInput("prime must be at least 2");
  if (exponents.empty() || exponents.size() > EndoMatrix::kMaxRank) {
    throw InvalidInput("p-group rank must be between 1 and " +
                       std::to_string(EndoMatrix::kMaxRank));
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) throw InvalidInput("exponents must be positive");
    if (i > 0 && exponents[i] < exponents[i - 1]) {
      throw InvalidInput("exponents must be nondecreasing");
    }
  }
}

void require_same_shape(const EndoMatrix& a, const EndoMatrix& b) {
  if (!a.same_shape(b)) throw InvalidInput("endomorphism shape mismatch");
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid; a must be a unit mod m.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// Mod-p reduction as a dense matrix.
std::vector<std::uint32_t> reduce_mod_p(const EndoMatrix& m) {
  const std::size_t r = m.rank();
  std::vector<std::uint32_t> out(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out[i * r + j] = m(i, j) % m.p();
  }
  return out;
}

// Inverse over F_p by Gauss-Jordan; empty if singular.
std::vector<std::uint32_t> inverse_mod_p(std::vector<std::uint32_t> a, std::size_t r,
                                         std::uint32_t p) {
  std::vector<std::uint32_t> inv(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) inv[i * r + i] = 1;
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && a[pivot * r + col] == 0) ++pivot;
    if (pivot == r) return {};
    if (pivot != col) {
      for (std::size_t k = 0; k < r; ++k) {
        std::swap(a[pivot * r + k], a[col * r + k]);
        std::swap(inv[pivot * r + k], inv[col * r + k]);
      }
    }
    const std::uint32_t s = static_cast<std::uint32_t>(mod_inverse(a[col * r + col], p));
    for (std::size_t k = 0; k < r; ++k) {
      a[col * r + k] = a[col * r + k] * s % p;
      inv[col * r + k] = inv[col * r + k] * s % p;
    }
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || a[row * r + col] == 0) continue;
      const std::uint32_t f = a[row * r + col];
      for (std::size_t k = 0; k < r; ++k) {
        a[row * r + k] = (a[row * r + k] + (p - f) * a[col * r + k]) % p;
        inv[row * r + k] = (inv[row * r + k] + (p - f) * inv[col * r + k]) % p;
      }
    }
  }
  return inv;
}

}  // namespace

EndoMatrix::EndoMatrix(std::uint32_t p, std::span<const int> exponents) : p_(p) {
  check_shape(p, exponents);
  rank_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < rank_; ++i) {
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    mods_[i] = pow32(p, exponents[i]);
  }
}

EndoMatrix EndoMatrix::identity(std::uint32_t p, std::span<const int> exponents) {
  EndoMatrix m(p, exponents);
  for (std::size_t i = 0; i < m.rank(); ++i) m.e_[i * kMaxRank + i] = 1;
  return m;
}

EndoMatrix EndoMatrix::from_rows(std::uint32_t p, std::span<const int> exponents,
                                 const std::vector<std::vector<std::uint64_t>>& rows) {
  EndoMatrix m(p, exponents);
  if (rows.size() != m.rank()) throw InvalidInput("row count does not match rank");
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (rows[i].size() != m.rank()) throw InvalidInput("column count does not match rank");
    for (std::size_t j = 0; j < m.rank(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

EndoMatrix EndoMatrix::from_ring(std::uint32_t p, std::span<const int> exponents,
                                 const std::vector<std::vector<std::uint64_t>>& entries) {
  EndoMatrix m(p, exponents);
  const std::uint64_t top = m.mods_[m.rank() - 1];
  if (entries.size() != m.rank()) throw InvalidInput("row count does not match rank");
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (entries[i].size() != m.rank()) throw InvalidInput("column count does not match rank");
    for (std::size_t j = 0; j < m.rank(); ++j) {
      const std::uint64_t v = entries[i][j] % top;
      if (v % required_divisor(p, m.exps_[i], m.exps_[j]) != 0) {
        throw InvalidInput("ring entry violates the divisibility condition");
      }
      m.set(i, j, v);
    }
  }
  return m;
}

void EndoMatrix::set(std::size_t i, std::size_t j, std::uint64_t value) {
  if (i >= rank_ || j >= rank_) throw InvalidInput("matrix index out of range");
  const std::uint32_t v = static_cast<std::uint32_t>(value % mods_[i]);
  if (v % required_divisor(p_, exps_[i], exps_[j]) != 0) {
    throw InvalidInput("entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") must be divisible by p^(a_i - a_j)");
  }
  e_[i * kMaxRank + j] = v;
}

bool EndoMatrix::same_shape(const EndoMatrix& other) const {
  return p_ == other.p_ && rank_ == other.rank_ && exps_ == other.exps_;
}

std::uint64_t EndoMatrix::code() const {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) c = c * mods_[i] + e_[i * kMaxRank + j];
  }
  return c;
}

std::uint64_t EndoMatrix::code_radix() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      if (r > UINT64_MAX / mods_[i]) throw CapacityError("endomorphism code overflows 64 bits");
      r *= mods_[i];
    }
  }
  return r;
}

EndoMatrix EndoMatrix::decode(std::uint32_t p, std::span<const int> exponents, std::uint64_t code) {
  EndoMatrix m(p, exponents);
  for (std::size_t i = m.rank(); i-- > 0;) {
    for (std::size_t j = m.rank(); j-- > 0;) {
      m.set(i, j, code % m.mods_[i]);
      code /= m.mods_[i];
    }
  }
  return m;
}

std::string EndoMatrix::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p_ << ",\"exponents\":[";
  for (std::size_t i = 0; i < rank_; ++i) os << (i ? "," : "") << int{exps_[i]};
  os << "],\"rows\":[";
  for (std::size_t i = 0; i < rank_; ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < rank_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]}";
  return os.str();
}

Element endo_apply(const EndoMatrix& m, const Element& g) {
  if (g.size() != m.rank()) throw InvalidInput("vector length does not match matrix rank");
  Element out = g;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const std::uint64_t mod = m.row_modulus(i);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.rank(); ++j) acc = (acc + std::uint64_t{m(i, j)} * g[j]) % mod;
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

EndoMatrix endo_compose(const EndoMatrix& outer, const EndoMatrix& inner) {
  require_same_shape(outer, inner);
  EndoMatrix out = outer;
  const std::size_t r = outer.rank();
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t mod = outer.row_modulus(i);
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k) {
        acc = (acc + std::uint64_t{outer(i, k)} * inner(k, j)) % mod;
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

EndoMatrix endo_add(const EndoMatrix& a, const EndoMatrix& b) {
  require_same_shape(a, b);
  EndoMatrix out = a;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) out.set(i, j, std::uint64_t{a(i, j)} + b(i, j));
  }
  return out;
}

bool is_unit(const EndoMatrix& m) {
  if (m.rank() == 0) return false;
  return !inverse_mod_p(reduce_mod_p(m), m.rank(), m.p()).empty();
}

EndoMatrix invert(const EndoMatrix& m) {
  const std::size_t r = m.rank();
  const auto inv_p = inverse_mod_p(reduce_mod_p(m), r, m.p());
  if (inv_p.empty()) throw DomainError("endomorphism is not a unit");
  const auto exps = m.exponents();
  const EndoMatrix id = EndoMatrix::identity(m.p(), exps);
  // Lift the F_p inverse, then Newton: X <- X (2I - M X). The residual
  // I - M X squares each step and its entries are divisible by p.
  EndoMatrix x(m.p(), exps);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) x.set(i, j, inv_p[i * r + j]);
  }
  for (int iter = 0; iter < 64; ++iter) {
    const EndoMatrix mx = endo_compose(m, x);
    if (mx == id) break;
    EndoMatrix two_minus(m.p(), exps);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const std::uint64_t mod = m.row_modulus(i);
        const std::uint64_t target = (i == j ? 2 : 0) % mod;
        two_minus.set(i, j, (target + mod - mx(i, j)) % mod);
      }
    }
    x = endo_compose(x, two_minus);
  }
  if (endo_compose(m, x) != id || endo_compose(x, m) != id) {
    throw InternalError("matrix inversion did not converge");
  }
  return x;
}

EndoMatrix endo_power(const EndoMatrix& m, std::uint64_t k) {
  EndoMatrix result = EndoMatrix::identity(m.p(), m.exponents());
  EndoMatrix base = m;
  while (k > 0) {
    if (k & 1) result = endo_compose(result, base);
    base = endo_compose(base, base);
    k >>= 1;
  }
  return result;
}

bool is_unipotent_upper(const EndoMatrix& m) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::uint32_t red = m(i, j) % m.p();
      if (red != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::uint64_t candidate_count(std::uint32_t p, std::span<const int> exponents) {
  check_shape(p, exponents);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      const int choices_exp = std::min(exponents[i], exponents[j]);
      const std::uint64_t choices = ipow(p, static_cast<unsigned>(choices_exp));
      if (n > UINT64_MAX / choices) return UINT64_MAX;
      n *= choices;
    }
  }
  return n;
}

std::vector<EndoMatrix> enumerate_units(std::uint32_t p, std::span<const int> exponents,
                                        std::uint64_t cap) {
  const std::uint64_t total = candidate_count(p, exponents);
  if (total > cap) {
    std::string shape;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      shape += (i ? "x" : "") + ("C" + std::to_string(ipow(p, static_cast<unsigned>(exponents[i]))));
    }
    throw CapacityError("Aut enumeration for the " + std::to_string(p) + "-block " + shape +
                        " needs " + std::to_string(total) + " candidates (cap " +
                        std::to_string(cap) + ")");
  }
  const std::size_t r = exponents.size();
  // Odometer over entries; entry (i, j) ranges over t * step for t < count.
  std::vector<std::uint32_t> step(r * r), count(r * r), digit(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      step[i * r + j] = required_divisor(p, exponents[i], exponents[j]);
      count[i * r + j] = pow32(p, std::min(exponents[i], exponents[j]));
    }
  }
  std::vector<EndoMatrix> units;
  EndoMatrix m(p, exponents);
  for (std::uint64_t c = 0; c < total; ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) m.set(i, j, std::uint64_t{digit[i * r + j]} * step[i * r + j]);
    }
    if (is_unit(m)) units.push_back(m);
    for (std::size_t k = r * r; k-- > 0;) {
      if (++digit[k] < count[k]) break;
      digit[k] = 0;
    }
  }
  std::sort(units.begin(), units.end(),
            [](const EndoMatrix& a, const EndoMatrix& b) { return a.code() < b.code(); });
  return units;
}

std::uint64_t aut_order_p_block(std::uint32_t p, std::span<const int> exponents) {
  check_shape(p, exponents);
  const std::size_t r = exponents.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t d = k, c = k;
    while (d + 1 < r && exponents[d + 1] == exponents[k]) ++d;
    while (c > 0 && exponents[c - 1] == exponents[k]) --c;
    // 1-based d_k = d + 1, c_k = c + 1.
    total *= ipow(p, static_cast<unsigned>(d + 1)) - ipow(p, static_cast<unsigned>(k));
    total *= ipow(ipow(p, static_cast<unsigned>(exponents[k])), static_cast<unsigned>(r - (d + 1)));
    total *= ipow(ipow(p, static_cast<unsigned>(exponents[k] - 1)), static_cast<unsigned>(r - c));
  }
  return total;
}

std::uint64_t aut_group_order(const GroupSpec& group) {
  std::uint64_t total = 1;
  for (const auto& b : group.blocks()) total *= aut_order_p_block(b.p, b.exponents);
  return total;
}

Automorphism aut_identity(const GroupSpec& group) {
  Automorphism a;
  for (const auto& b : group.blocks()) a.blocks.push_back(EndoMatrix::identity(b.p, b.exponents));
  return a;
}

Automorphism aut_scalar(const GroupSpec& group, std::uint64_t k) {
  Automorphism a;
  for (const auto& b : group.blocks()) {
    EndoMatrix m(b.p, b.exponents);
    for (std::size_t i = 0; i < m.rank(); ++i) m.set(i, i, k);
    if (!is_unit(m)) throw DomainError("scalar is not a unit");
    a.blocks.push_back(m);
  }
  return a;
}

bool aut_is_valid(const GroupSpec& group, const Automorphism& a) {
  if (a.blocks.size() != group.blocks().size()) return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const auto& b = group.blocks()[i];
    const auto& m = a.blocks[i];
    if (m.p() != b.p || m.exponents() != b.exponents || !is_unit(m)) return false;
  }
  return true;
}

Element aut_apply(const GroupSpec& group, const Automorphism& a, const Element& g) {
  if (!group.contains(g)) throw InvalidInput("element does not belong to " + group.name());
  if (a.blocks.size() != group.blocks().size()) throw InvalidInput("automorphism shape mismatch");
  Element out = g;
  for (std::size_t bi = 0; bi < a.blocks.size(); ++bi) {
    const auto& blk = group.blocks()[bi];
    const auto& m = a.blocks[bi];
    if (m.rank() != blk.rank() || m.p() != blk.p) throw InvalidInput("automorphism shape mismatch");
    for (std::size_t i = 0; i < m.rank(); ++i) {
      const std::uint64_t mod = m.row_modulus(i);
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < m.rank(); ++j) {
        acc = (acc + std::uint64_t{m(i, j)} * g[blk.offset + j]) % mod;
      }
      out[blk.offset + i] = static_cast<std::uint32_t>(acc);
    }
  }
  return out;
}

Automorphism aut_compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.blocks.size() != inner.blocks.size()) throw InvalidInput("automorphism shape mismatch");
  Automorphism out;
  out.blocks.reserve(outer.blocks.size());
  for (std::size_t i = 0; i < outer.blocks.size(); ++i) {
    out.blocks.push_back(endo_compose(outer.blocks[i], inner.blocks[i]));
  }
  return out;
}

Automorphism aut_invert(const Automorphism& a) {
  Automorphism out;
  out.blocks.reserve(a.blocks.size());
  for (const auto& m : a.blocks) out.blocks.push_back(invert(m));
  return out;
}

std::uint64_t aut_code(const Automorphism& a) {
  std::uint64_t c = 0;
  for (const auto& m : a.blocks) c = c * m.code_radix() + m.code();
  return c;
}

std::uint64_t aut_code_radix(const GroupSpec& group) {
  std::uint64_t r = 1;
  for (const auto& b : group.blocks()) {
    const std::uint64_t br = EndoMatrix(b.p, b.exponents).code_radix();
    if (r > UINT64_MAX / br) throw CapacityError("automorphism code overflows 64 bits");
    r *= br;
  }
  return r;
}

Automorphism aut_decode(const GroupSpec& group, std::uint64_t code) {
  Automorphism a;
  a.blocks.resize(group.blocks().size());
  for (std::size_t bi = group.blocks().size(); bi-- > 0;) {
    const auto& b = group.blocks()[bi];
    const std::uint64_t radix = EndoMatrix(b.p, b.exponents).code_radix();
    a.blocks[bi] = EndoMatrix::decode(b.p, b.exponents, code % radix);
    code /= radix;
  }
  return a;
}

std::string aut_to_json(const Automorphism& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    if (i) out += ",";
    out += a.blocks[i].to_json();
  }
  return out + "]";
}

AutGroup::AutGroup(GroupSpec group, std::vector<Automorphism> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const Automorphism& a, const Automorphism& b) { return aut_code(a) < aut_code(b); });
  by_code_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!by_code_.emplace(aut_code(elements_[i]), i).second) {
      throw InvalidInput("duplicate automorphism in list");
    }
  }
}

std::int64_t AutGroup::find(std::uint64_t code) const {
  const auto it = by_code_.find(code);
  return it == by_code_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

const std::vector<std::size_t>& AutGroup::generators() const {
  if (!generators_.empty() || elements_.empty()) return generators_;
  const std::size_t n = elements_.size();
  std::vector<char> in(n, 0);
  std::size_t in_count = 0;
  const std::int64_t id = find(aut_identity(group_));
  if (id < 0) throw InternalError("automorphism list lacks the identity");
  std::vector<std::size_t> members;
  in[static_cast<std::size_t>(id)] = 1;
  members.push_back(static_cast<std::size_t>(id));
  in_count = 1;

  auto lookup = [&](const Automorphism& a) {
    const std::int64_t k = find(a);
    if (k < 0) throw InternalError("automorphism list is not closed under composition");
    return static_cast<std::size_t>(k);
  };

  std::vector<std::size_t> gens;
  for (std::size_t cand = 0; cand < n && in_count < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    // Old members only need the new generator; new members need every one.
    std::deque<std::pair<std::size_t, bool>> queue;
    for (const std::size_t m : members) queue.emplace_back(m, false);
    while (!queue.empty()) {
      const auto [cur, is_new] = queue.front();
      queue.pop_front();
      const std::size_t first = is_new ? 0 : gens.size() - 1;
      for (std::size_t gi = first; gi < gens.size(); ++gi) {
        const std::size_t next = lookup(aut_compose(elements_[cur], elements_[gens[gi]]));
        if (!in[next]) {
          in[next] = 1;
          ++in_count;
          members.push_back(next);
          queue.emplace_back(next, true);
        }
      }
    }
  }
  generators_ = std::move(gens);
  return generators_;
}

AutGroup enumerate_aut(const GroupSpec& group, std::uint64_t cap) {
  std::vector<std::vector<EndoMatrix>> per_block;
  for (const auto& b : group.blocks()) per_block.push_back(enumerate_units(b.p, b.exponents, cap));
  std::uint64_t total = 1;
  for (const auto& v : per_block) total *= v.size();
  if (total > cap) {
    throw CapacityError("|Aut(" + group.name() + ")| = " + std::to_string(total) +
                        " exceeds the cap " + std::to_string(cap));
  }
  std::vector<Automorphism> all;
  all.reserve(total);
  std::vector<std::size_t> idx(per_block.size(), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    Automorphism a;
    for (std::size_t b = 0; b < per_block.size(); ++b) a.blocks.push_back(per_block[b][idx[b]]);
    all.push_back(std::move(a));
    for (std::size_t b = per_block.size(); b-- > 0;) {
      if (++idx[b] < per_block[b].size()) break;
      idx[b] = 0;
    }
  }
  return AutGroup(group, std::move(all));
}

std::vector<EndoMatrix> sylow_p_aut(const GroupSpec& group, std::uint32_t p, std::uint64_t cap) {
  if (!group.is_p_group() || group.blocks().front().p != p) {
    throw InvalidInput(group.name() + " is not a " + std::to_string(p) + "-group");
  }
  const auto& exps = group.blocks().front().exponents;
  const std::size_t r = exps.size();
  // Entry (i, j) runs over base + step * t: the diagonal is 1 mod p, entries
  // on or below it are also divisible by p, all respect divisibility.
  std::vector<std::uint64_t> base(r * r), step(r * r), count(r * r);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t mod = ipow(p, static_cast<unsigned>(exps[i]));
    for (std::size_t j = 0; j < r; ++j) {
      const int d = std::max(0, exps[i] - exps[j]);
      const std::uint64_t st = ipow(p, static_cast<unsigned>(j <= i ? std::max(d, 1) : d));
      base[i * r + j] = i == j ? 1 : 0;
      step[i * r + j] = st;
      count[i * r + j] = st >= mod ? 1 : mod / st;
      total *= count[i * r + j];
      if (total > cap) {
        throw CapacityError("Sylow subgroup of Aut(" + group.name() + ") exceeds the cap " + std::to_string(cap));
      }
    }
  }
  std::vector<EndoMatrix> out;
  std::vector<std::uint64_t> t(r * r, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    EndoMatrix m(p, exps);
    for (std::size_t e = 0; e < r * r; ++e) m.set(e / r, e % r, base[e] + step[e] * t[e]);
    out.push_back(m);
    for (std::size_t e = 0; e < r * r; ++e) {
      if (++t[e] < count[e]) break;
      t[e] = 0;
    }
  }
  return out;
}

}  // namespace holobrace
