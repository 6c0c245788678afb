#include "holobrace/reduce.hpp"

#include <algorithm>

#include "holobrace/error.hpp"
#include "holobrace/structured.hpp"

namespace holobrace {

namespace {

bool is_cyclic_odd(const GroupSpec& g) {
  if (g.order() % 2 == 0) return false;
  return std::all_of(g.blocks().begin(), g.blocks().end(), [](const PrimeBlock& b) { return b.rank() == 1; });
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

Automorphism assemble(const GroupSpec& whole, const Automorphism& odd_part, const EndoMatrix& two_block) {
  Automorphism a;
  std::size_t next_odd = 0;
  for (const auto& b : whole.blocks()) {
    a.blocks.push_back(b.p == 2 ? two_block : odd_part.blocks.at(next_odd++));
  }
  return a;
}

bool same(const GroupSpec& g, const HolElement& a, const HolElement& b) {
  return hol_encode(g, a) == hol_encode(g, b);
}

// True iff (x, y) satisfy the presentation of k.
bool presents(const GroupSpec& g, const HolElement& x, const HolElement& y, const TargetKind& k) {
  const std::uint64_t m = k.m();
  const HolElement one = hol_identity(g);
  const HolElement half = hol_power(g, x, m / 2);
  return same(g, hol_power(g, x, m), one) && !same(g, half, one) &&
         same(g, hol_compose(g, y, x), hol_compose(g, hol_invert(g, x), y)) &&
         same(g, hol_compose(g, y, y), k.is_quaternion() ? half : one);
}

void require_two_group(const RegularSubgroup& h) {
  if (!is_power_of_two(h.group.order()) || h.group.order() < 4) {
    throw InvalidInput("expected a regular subgroup over a 2-group, got Hol(" + h.group.name() + ")");
  }
}

}  // namespace

bool TauMap::inverts(std::uint64_t code) const {
  return !std::binary_search(kernel.begin(), kernel.end(), code);
}

std::vector<TauMap> tau_set(const RegularSubgroup& h) {
  require_two_group(h);
  const GroupSpec& g = h.group;
  const auto elems = h.decoded();
  const std::uint64_t m = elems.size() / 2;
  std::vector<HolElement> squares;
  for (const auto& e : elems) squares.push_back(hol_compose(g, e, e));
  const auto frattini = generate_closure(g, squares, elems.size());
  std::vector<std::uint64_t> phi;
  for (const auto& e : frattini) phi.push_back(hol_encode(g, e));
  std::sort(phi.begin(), phi.end());

  // Index-2 subgroups are the unions of the Frattini subgroup with one
  // nontrivial coset.
  std::vector<std::vector<std::uint64_t>> index_two;
  if (phi.size() == m) {
    index_two.push_back(phi);
  } else if (phi.size() * 4 == elems.size()) {
    std::vector<std::uint64_t> covered = phi;
    for (const auto& e : elems) {
      const std::uint64_t code = hol_encode(g, e);
      if (std::binary_search(covered.begin(), covered.end(), code)) continue;
      std::vector<std::uint64_t> k = phi;
      for (const auto& f : frattini) k.push_back(hol_encode(g, hol_compose(g, e, f)));
      std::sort(k.begin(), k.end());
      covered.insert(covered.end(), k.begin(), k.end());
      std::sort(covered.begin(), covered.end());
      covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
      index_two.push_back(std::move(k));
    }
  } else {
    throw InvalidInput("subgroup is not quaternion or dihedral");
  }

  std::vector<TauMap> out;
  for (auto& k : index_two) {
    const bool cyclic = std::any_of(k.begin(), k.end(), [&](std::uint64_t c) {
      return hol_order(g, hol_decode(g, c)) == m;
    });
    if (cyclic) out.push_back({h, std::move(k)});
  }
  return out;
}

RegularSubgroup semidirect_subgroup(const RegularSubgroup& h, const TauMap& tau, const GroupSpec& odd) {
  require_two_group(h);
  if (odd.order() == 1) return h;
  if (!is_cyclic_odd(odd)) throw InvalidInput("odd part " + odd.name() + " must be cyclic of odd order");
  if (tau.domain.elements != h.elements) throw InvalidInput("tau is defined on a different subgroup");
  const GroupSpec whole = GroupSpec::product(odd, h.group);
  const SylowSplit split = sylow_decompose(whole);
  const std::uint64_t s = odd.order();
  const Automorphism id = aut_identity(odd);
  const Automorphism minus = aut_scalar(odd, s - 1);
  const std::uint64_t m2 = h.elements.size() / 2;

  auto lift = [&](const HolElement& e, const Element& a) {
    const bool inv = tau.inverts(hol_encode(h.group, e));
    return HolElement{assemble(whole, inv ? minus : id, e.aut.blocks.at(0)), split.combine(a, e.trans)};
  };

  RegularSubgroup g;
  g.group = whole;
  g.kind = TargetKind(h.kind.kind, h.kind.n, s);
  const auto elems = h.decoded();
  std::vector<HolElement> lifted;
  for (const auto& e : elems) {
    for (std::uint64_t a = 0; a < s; ++a) lifted.push_back(lift(e, odd.element_at(a)));
  }
  for (const auto& e : lifted) g.elements.push_back(hol_encode(whole, e));
  std::sort(g.elements.begin(), g.elements.end());
  if (!is_regular(whole, lifted)) throw InternalError("semidirect subgroup is not regular");

  // x generates the kernel; y is any element outside it presenting the group.
  const HolElement* x = nullptr;
  for (const auto& e : elems) {
    if (!tau.inverts(hol_encode(h.group, e)) && hol_order(h.group, e) == m2) {
      x = &e;
      break;
    }
  }
  if (x == nullptr) throw InvalidInput("kernel of tau is not cyclic of index 2");
  const TargetKind k2(h.kind.kind, h.kind.n);
  const HolElement* y = nullptr;
  for (const auto& e : elems) {
    if (tau.inverts(hol_encode(h.group, e)) && presents(h.group, *x, e, k2)) {
      y = &e;
      break;
    }
  }
  if (y == nullptr) throw InternalError("no presenting y outside the kernel of tau");
  Element gen = odd.identity();
  for (std::size_t i = 0; i < gen.size(); ++i) gen[i] = 1;
  const HolElement gx = lift(*x, gen);
  const HolElement gy = lift(*y, odd.identity());
  if (!presents(whole, gx, gy, g.kind)) throw InternalError("semidirect witnesses fail the presentation");
  g.x = hol_encode(whole, gx);
  g.y = hol_encode(whole, gy);
  return g;
}

std::pair<RegularSubgroup, TauMap> split_subgroup(const RegularSubgroup& g) {
  const SylowSplit split = sylow_decompose(g.group);
  if (!is_cyclic_odd(split.odd)) throw InvalidInput("odd part of " + g.group.name() + " is not cyclic");
  const GroupSpec& two = split.two;
  const Automorphism id = aut_identity(split.odd);
  const Automorphism minus = aut_scalar(split.odd, split.odd.order() - 1);

  auto project = [&](const HolElement& e, bool* inverted) {
    Automorphism odd_part;
    EndoMatrix two_block;
    for (std::size_t i = 0; i < g.group.blocks().size(); ++i) {
      if (g.group.blocks()[i].p == 2) {
        two_block = e.aut.blocks[i];
      } else {
        odd_part.blocks.push_back(e.aut.blocks[i]);
      }
    }
    const std::uint64_t oc = aut_code(odd_part);
    if (oc != aut_code(id) && oc != aut_code(minus)) {
      throw InvalidInput("odd part acts by an automorphism other than +-1");
    }
    if (inverted != nullptr) *inverted = oc != aut_code(id);
    return HolElement{Automorphism{{two_block}}, split.split(e.trans).second};
  };

  RegularSubgroup h;
  h.group = two;
  h.kind = TargetKind(g.kind.kind, g.kind.n);
  std::vector<std::uint64_t> kernel;
  for (const auto& e : g.decoded()) {
    if (split.split(e.trans).first != split.odd.identity()) continue;
    bool inverted = false;
    const std::uint64_t code = hol_encode(two, project(e, &inverted));
    h.elements.push_back(code);
    if (!inverted) kernel.push_back(code);
  }
  std::sort(h.elements.begin(), h.elements.end());
  std::sort(kernel.begin(), kernel.end());
  if (h.elements.size() != two.order()) throw InvalidInput("subgroup is not regular");
  h.x = hol_encode(two, project(hol_decode(g.group, g.x), nullptr));
  h.y = hol_encode(two, project(hol_decode(g.group, g.y), nullptr));
  TauMap tau{h, std::move(kernel)};
  return {std::move(h), std::move(tau)};
}

Census two_part_census(const GroupSpec& two, const TargetKind& kind, const EngineOptions& opts) {
  if (auto c = structured_census(two, kind)) return *c;
  return Enumerator(two, opts).census(kind);
}

Census reduce_census(const GroupSpec& group, const TargetKind& kind, const EngineOptions& opts,
                     const Census* base_in) {
  const SylowSplit split = sylow_decompose(group);
  if (!is_cyclic_odd(split.odd) || split.odd.order() != kind.s || split.two.order() != kind.two_part().order()) {
    throw InvalidInput("reduction needs N = C_s x N_2 with |N_2| = " + std::to_string(kind.two_part().order()) +
                       " and s = " + std::to_string(kind.s) + ", got " + group.name());
  }
  const TargetKind k2(kind.kind, kind.n);
  if (base_in != nullptr && (!(base_in->group == split.two) || !(base_in->kind == k2))) {
    throw InvalidInput("precomputed census is for the wrong 2-part");
  }
  if (kind.s == 1) return base_in != nullptr ? *base_in : two_part_census(group, kind, opts);
  const Census base = base_in != nullptr ? *base_in : two_part_census(split.two, k2, opts);

  Census out;
  out.group = group;
  out.kind = kind;
  out.path = "reduction";
  std::vector<std::pair<RegularSubgroup, TauMap>> pairs;
  std::vector<std::uint64_t> orbit_sizes;
  if (!k2.exceptional()) {
    out.r = base.r;
    for (const auto& cls : base.classes) {
      auto taus = tau_set(cls.representative);
      if (taus.size() != 1) throw InternalError("expected a single tau for " + k2.name());
      pairs.emplace_back(cls.representative, std::move(taus.front()));
      orbit_sizes.push_back(cls.orbit_size);
    }
  } else {
    out.r = 3 * base.r;
    const GroupSpec c3 = GroupSpec::product(GroupSpec::from_orders({3}), split.two);
    const Census direct = Enumerator(c3, opts).census(TargetKind(kind.kind, kind.n, 3));
    if (direct.r != out.r) {
      throw InternalError("direct search over " + c3.name() + " finds " + std::to_string(direct.r) +
                          " subgroups, expected " + std::to_string(out.r));
    }
    for (const auto& cls : direct.classes) {
      pairs.push_back(split_subgroup(cls.representative));
      orbit_sizes.push_back(cls.orbit_size);
    }
  }
  const std::uint64_t aut = aut_group_order(group);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ConjugacyClass cls;
    cls.representative = semidirect_subgroup(pairs[i].first, pairs[i].second, split.odd);
    cls.orbit_size = orbit_sizes[i];
    cls.stabilizer_order = aut / orbit_sizes[i];
    total += orbit_sizes[i];
    out.classes.push_back(std::move(cls));
  }
  if (total != out.r) throw InternalError("reduced orbit sizes do not sum to r");
  std::sort(out.classes.begin(), out.classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.representative.elements < b.representative.elements;
  });
  out.c = out.classes.size();
  return out;
}

std::pair<std::uint64_t, std::uint64_t> reduce_counts(const GroupSpec& group, const TargetKind& kind,
                                                      const EngineOptions& opts) {
  const Census c = reduce_census(group, kind, opts);
  return {c.r, c.c};
}

}  // namespace holobrace
