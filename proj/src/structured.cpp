#include "holobrace/structured.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "holobrace/error.hpp"

namespace holobrace {

namespace {

// Affine maps on a 2-group with a single prime block.
struct Aff {
  EndoMatrix a;
  Element v;
};

struct Ctx {
  GroupSpec group;
  std::vector<int> exps;

  Aff mul(const Aff& x, const Aff& y) const {
    return {endo_compose(x.a, y.a), add(group, endo_apply(x.a, y.v), x.v)};
  }
  Aff id() const { return {EndoMatrix::identity(2, exps), group.identity()}; }
  std::uint64_t code(const Aff& x) const { return x.a.code() * group.order() + group.index_of(x.v); }
  HolElement value(const Aff& x) const { return {Automorphism{{x.a}}, x.v}; }
  Aff power(Aff x, std::uint64_t k) const {
    Aff r = id();
    while (k > 0) {
      if (k & 1) r = mul(r, x);
      x = mul(x, x);
      k >>= 1;
    }
    return r;
  }
  // alpha x alpha^-1 with alpha_inv precomputed.
  Aff conj(const EndoMatrix& alpha, const EndoMatrix& alpha_inv, const Aff& x) const {
    return {endo_compose(endo_compose(alpha, x.a), alpha_inv), endo_apply(alpha, x.v)};
  }
};

struct Sub {
  std::vector<std::uint64_t> keys;
  Aff x, y;
};

// {X^i, X^i Y}, or nullopt if the translation parts repeat.
std::optional<Sub> build(const Ctx& ctx, const Aff& x, const Aff& y, std::uint64_t m) {
  Sub s{{}, x, y};
  std::set<Element> trans;
  Aff p = ctx.id();
  for (std::uint64_t i = 0; i < m; ++i) {
    const Aff py = ctx.mul(p, y);
    if (!trans.insert(p.v).second || !trans.insert(py.v).second) return std::nullopt;
    s.keys.push_back(ctx.code(p));
    s.keys.push_back(ctx.code(py));
    p = ctx.mul(p, x);
  }
  std::sort(s.keys.begin(), s.keys.end());
  return s;
}

void check_relations(const Ctx& ctx, const Aff& x, const Aff& y, const TargetKind& k) {
  const std::uint64_t m = k.m();
  const Aff one = ctx.id();
  const Aff xh = ctx.power(x, m / 2);
  const auto same = [&](const Aff& u, const Aff& w) { return ctx.code(u) == ctx.code(w); };
  const Aff yx = ctx.mul(y, x);
  const Aff xinv = ctx.power(x, m - 1);
  const bool ok = same(ctx.power(x, m), one) && !same(xh, one) && same(yx, ctx.mul(xinv, y)) &&
                  same(ctx.mul(y, y), k.is_quaternion() ? xh : one);
  if (!ok) throw InternalError("structured solution violates the " + k.name() + " relations");
}

RegularSubgroup to_regular(const Ctx& ctx, const TargetKind& k, const Sub& s) {
  RegularSubgroup r;
  r.group = ctx.group;
  r.kind = k;
  r.elements = s.keys;
  r.x = ctx.code(s.x);
  r.y = ctx.code(s.y);
  return r;
}

struct Orbits {
  std::vector<Sub> all;
  std::vector<ConjugacyClass> classes;
};

// Orbits of `seeds` under the full list of automorphisms `auts`.
Orbits orbits_under(const Ctx& ctx, const TargetKind& k, const std::vector<Sub>& seeds,
                    const std::vector<EndoMatrix>& auts) {
  std::vector<EndoMatrix> inverses;
  for (const auto& a : auts) inverses.push_back(invert(a));
  Orbits out;
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& seed : seeds) {
    if (seen.count(seed.keys)) continue;
    std::map<std::vector<std::uint64_t>, Sub> orbit;
    std::uint64_t stabilizer = 0;
    for (std::size_t i = 0; i < auts.size(); ++i) {
      Sub c{{}, ctx.conj(auts[i], inverses[i], seed.x), ctx.conj(auts[i], inverses[i], seed.y)};
      for (const std::uint64_t key : seed.keys) {
        const std::uint64_t n = ctx.group.order();
        const Aff e{EndoMatrix::decode(2, ctx.exps, key / n), ctx.group.element_at(key % n)};
        c.keys.push_back(ctx.code(ctx.conj(auts[i], inverses[i], e)));
      }
      std::sort(c.keys.begin(), c.keys.end());
      if (c.keys == seed.keys) ++stabilizer;
      orbit.emplace(c.keys, std::move(c));
    }
    if (stabilizer * orbit.size() != auts.size()) {
      throw InternalError("orbit-stabilizer identity fails in the structured solver");
    }
    ConjugacyClass cls;
    cls.representative = to_regular(ctx, k, orbit.begin()->second);
    cls.orbit_size = orbit.size();
    cls.stabilizer_order = stabilizer;
    out.classes.push_back(std::move(cls));
    for (auto& [keys, s] : orbit) {
      seen.insert(keys);
      out.all.push_back(std::move(s));
    }
  }
  std::sort(out.all.begin(), out.all.end(), [](const Sub& a, const Sub& b) { return a.keys < b.keys; });
  std::sort(out.classes.begin(), out.classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.representative.elements < b.representative.elements;
  });
  return out;
}

std::uint64_t inverse_mod_pow2(std::uint64_t a, std::uint64_t mod) {
  // Newton iteration for odd a.
  std::uint64_t x = a;
  for (int i = 0; i < 6; ++i) x = x * (2 - a * x);
  return x & (mod - 1);
}

}  // namespace

const std::vector<std::string>& StructuredGeneratorPair::param_names(Family f) {
  static const std::vector<std::string> cyclic{"alpha", "beta", "v", "w"};
  static const std::vector<std::string> rank2{"a", "b", "r", "s", "alpha", "beta", "v1", "v2", "w1", "w2"};
  return f == Family::cyclic ? cyclic : rank2;
}

std::optional<StructuredResult> solve_cyclic(int n, Kind kind) {
  if (n < 4) return std::nullopt;
  if (n > 20) throw CapacityError("cyclic solver supports n <= 20");
  const std::uint64_t mod = std::uint64_t{1} << n;
  const TargetKind k(kind, n);
  Ctx ctx{GroupSpec::from_orders({mod}), {n}};
  const std::uint64_t y2 = kind == Kind::quaternion ? mod / 2 : 0;

  std::vector<std::uint64_t> involutions;
  for (std::uint64_t u = 1; u < mod; u += 2) {
    if (u * u % mod == 1) involutions.push_back(u);
  }
  StructuredResult res;
  res.family = Family::cyclic;
  res.n = n;
  res.kind = k;
  std::vector<Sub> found;
  for (const std::uint64_t alpha : involutions) {
    for (std::uint64_t v = 0; v < mod; ++v) {
      if ((1 + alpha) * v % 8 != 4) continue;
      for (const std::uint64_t beta : involutions) {
        for (std::uint64_t w = 0; w < mod; ++w) {
          if ((alpha + beta) * v % mod != (alpha + mod - 1) * w % mod) continue;
          if ((1 + beta) * w % mod != y2) continue;
          const Aff x{EndoMatrix::from_rows(2, ctx.exps, {{alpha}}), Element{static_cast<std::uint32_t>(v)}};
          const Aff y{EndoMatrix::from_rows(2, ctx.exps, {{beta}}), Element{static_cast<std::uint32_t>(w)}};
          const std::uint64_t cx = ctx.code(x), cy = ctx.code(y);
          const bool known = std::any_of(found.begin(), found.end(), [&](const Sub& s) {
            return std::binary_search(s.keys.begin(), s.keys.end(), cx) &&
                   std::binary_search(s.keys.begin(), s.keys.end(), cy);
          });
          if (known) continue;
          auto s = build(ctx, x, y, k.m());
          if (!s) continue;
          check_relations(ctx, x, y, k);
          res.pairs.push_back({Family::cyclic, n, kind, {alpha, beta, v, w}, ctx.value(x), ctx.value(y)});
          found.push_back(std::move(*s));
        }
      }
    }
  }
  std::vector<EndoMatrix> auts;
  for (std::uint64_t g = 1; g < mod; g += 2) auts.push_back(EndoMatrix::from_rows(2, ctx.exps, {{g}}));
  Orbits orb = orbits_under(ctx, k, found, auts);
  if (orb.all.size() != found.size()) {
    throw InternalError("cyclic solutions are not closed under conjugation");
  }
  for (const auto& s : orb.all) res.subgroups.push_back(to_regular(ctx, k, s));
  res.classes = std::move(orb.classes);
  res.r = res.subgroups.size();
  res.c = res.classes.size();
  return res;
}

std::optional<StructuredResult> solve_rank2(int n, Kind kind) {
  if (n < 5) return std::nullopt;
  if (n > 16) throw CapacityError("rank-2 solver supports n <= 16");
  const std::uint64_t mod = std::uint64_t{1} << (n - 1);
  const std::uint64_t top = mod / 2;  // 2^{n-2}
  const TargetKind k(kind, n);
  Ctx ctx{GroupSpec::from_orders({2, mod}), {1, n - 1}};
  const std::uint64_t s = kind == Kind::quaternion ? 1 : 0;
  auto matrix = [&](std::uint64_t a, std::uint64_t b, std::uint64_t alpha) {
    return EndoMatrix::from_rows(2, ctx.exps, {{1, a}, {top * b, alpha}});
  };
  const Element v{0, 1}, w{1, 0};

  StructuredResult res;
  res.family = Family::rank2;
  res.n = n;
  res.kind = k;
  std::vector<Sub> fundamentals;
  for (std::uint64_t a = 0; a < 2; ++a) {
    for (std::uint64_t b = 0; b < 2; ++b) {
      for (std::uint64_t r = 0; r < 2; ++r) {
        if (r != a) continue;
        for (std::uint64_t alpha = 1; alpha < mod; alpha += 2) {
          if (alpha % 4 != 1) continue;
          if (alpha * alpha % mod != (1 + top * a * s) % mod) continue;
          const std::uint64_t alpha_inv = inverse_mod_pow2(alpha, mod);
          for (std::uint64_t beta = 1; beta < mod; beta += 2) {
            if (beta != (top * b * (1 + a) + mod - alpha_inv) % mod) continue;
            const Aff x{matrix(a, b, alpha), v};
            const Aff y{EndoMatrix::from_rows(2, ctx.exps, {{1, r}, {top * s, beta}}), w};
            check_relations(ctx, x, y, k);
            auto sub = build(ctx, x, y, k.m());
            if (!sub) throw InternalError("fundamental subgroup is not regular");
            res.pairs.push_back({Family::rank2, n, kind, {a, b, r, s, alpha, beta, 0, 1, 1, 0},
                                 ctx.value(x), ctx.value(y)});
            fundamentals.push_back(std::move(*sub));
          }
        }
      }
    }
  }
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& f : fundamentals) distinct.insert(f.keys);
  if (fundamentals.size() != 8 || distinct.size() != 8) {
    throw InternalError("expected 8 distinct fundamental subgroups, found " +
                        std::to_string(distinct.size()));
  }

  // Aut(N) is exactly the matrices [[1, p], [2^{n-2} q, gamma]].
  std::vector<EndoMatrix> auts;
  for (std::uint64_t p = 0; p < 2; ++p) {
    for (std::uint64_t q = 0; q < 2; ++q) {
      for (std::uint64_t gamma = 1; gamma < mod; gamma += 2) auts.push_back(matrix(p, q, gamma));
    }
  }
  Orbits orb = orbits_under(ctx, k, fundamentals, auts);

  // Count the X-matrices of the normal form directly and compare with the
  // generators of <X> found in the orbits.
  std::set<std::uint64_t> x_matrices, x_found;
  for (std::uint64_t a = 0; a < 2; ++a) {
    for (std::uint64_t b = 0; b < 2; ++b) {
      for (std::uint64_t alpha = 1; alpha < mod; alpha += 4) {
        if (alpha * alpha % mod != (1 + top * a * s) % mod) continue;
        for (std::uint32_t v1 = 0; v1 < 2; ++v1) {
          for (std::uint32_t v2 = 1; v2 < mod; v2 += 2) {
            x_matrices.insert(ctx.code(Aff{matrix(a, b, alpha), Element{v1, v2}}));
          }
        }
      }
    }
  }
  for (const auto& sub : orb.all) {
    Aff p = sub.x;
    const Aff x2 = ctx.mul(sub.x, sub.x);
    for (std::uint64_t i = 1; i < k.m(); i += 2, p = ctx.mul(p, x2)) x_found.insert(ctx.code(p));
  }
  if (x_matrices != x_found || x_matrices.size() / top != orb.all.size()) {
    throw InternalError("X-matrix count disagrees with the orbit union");
  }
  for (const auto& sub : orb.all) res.subgroups.push_back(to_regular(ctx, k, sub));
  res.classes = std::move(orb.classes);
  res.r = res.subgroups.size();
  res.c = res.classes.size();
  return res;
}

std::optional<Census> structured_census(const GroupSpec& group, const TargetKind& kind) {
  if (kind.s != 1 || kind.order() != group.order() || !group.is_p_group() ||
      group.blocks().front().p != 2) {
    return std::nullopt;
  }
  const auto& e = group.blocks().front().exponents;
  std::optional<StructuredResult> res;
  if (e.size() == 1) res = solve_cyclic(kind.n, kind.kind);
  if (e.size() == 2 && e[0] == 1) res = solve_rank2(kind.n, kind.kind);
  if (!res) return std::nullopt;
  Census c;
  c.group = group;
  c.kind = kind;
  c.classes = std::move(res->classes);
  c.c = res->c;
  c.r = res->r;
  c.path = "structured";
  return c;
}

}  // namespace holobrace
