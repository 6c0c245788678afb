#include "holobrace/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "holobrace/error.hpp"

namespace holobrace {

namespace {

using Idx = HolTable::Idx;
using Keys = std::vector<std::uint64_t>;

struct KeysHash {
  std::size_t operator()(const Keys& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (const std::uint64_t x : k) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

struct Found {
  Keys keys;
  Idx x, y;
};

// Runs body(worker, item) for item in [0, count) striped over workers and
// rethrows the first exception.
template <class Body>
void parallel_for(unsigned workers, std::uint32_t count, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, count));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint32_t i = w; i < count; i += workers) body(w, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// All regular subgroups of the target kind whose automorphism parts lie in
// `allowed` (every automorphism when empty). One X per cyclic subgroup: the
// generator with the least key.
std::vector<Found> search(const HolTable& t, const TargetKind& kind, const std::vector<char>& allowed,
                          unsigned workers) {
  const std::uint32_t n = t.points();
  const std::uint64_t m = kind.m();
  const std::uint64_t half = m / 2;
  const auto& basis = t.basis();
  std::vector<std::vector<Found>> partial(std::max(1u, workers));

  parallel_for(workers, t.aut_count(), [&](unsigned w, std::uint32_t a) {
    if (!allowed.empty() && !allowed[a]) return;
    if (m % t.aut_order(a) != 0) return;
    const std::uint32_t ainv = t.aut_inv(a);
    std::vector<char> in_orbit(n, 0), seen(n, 0);
    std::vector<Idx> pw(m);
    std::unordered_set<std::uint64_t> covered;
    for (std::uint32_t v = 0; v < n; ++v) {
      const Idx x{a, v};
      // <X>.0 must have exactly m points, which also forces X^m = 1.
      std::uint32_t pt = 0;
      bool ok = true;
      for (std::uint64_t k = 1; k < m && ok; ++k) {
        pt = t.act(x, pt);
        ok = pt != 0;
      }
      if (!ok || t.act(x, pt) != 0) continue;

      pw[0] = t.identity();
      for (std::uint64_t k = 1; k < m; ++k) pw[k] = t.mul(pw[k - 1], x);
      const std::uint64_t xkey = t.key(x);
      bool least = true;
      for (std::uint64_t k = 2; k < m && least; ++k) {
        if (std::gcd(k, m) == 1 && t.key(pw[k]) < xkey) least = false;
      }
      if (!least) continue;

      for (std::uint64_t k = 0; k < m; ++k) in_orbit[t.act(pw[k], 0)] = 1;
      const Idx target = kind.is_quaternion() ? pw[half] : t.identity();
      covered.clear();
      for (const std::uint32_t b : t.square_roots(target.aut)) {
        if (!allowed.empty() && !allowed[b]) continue;
        bool rel = true;
        for (const std::uint32_t e : basis) {
          if (t.apply(b, t.apply(a, e)) != t.apply(ainv, t.apply(b, e))) {
            rel = false;
            break;
          }
        }
        if (!rel) continue;
        // YX = X^-1 Y:  A^-1 w - w = B v + A^-1 v.   Y^2 = T:  B w + w = t.
        const std::uint32_t rhs = t.add(t.apply(b, v), t.apply(ainv, v));
        for (std::uint32_t wt = 0; wt < n; ++wt) {
          if (in_orbit[wt]) continue;
          if (t.add(t.apply(ainv, wt), t.neg(wt)) != rhs) continue;
          if (t.add(t.apply(b, wt), wt) != target.trans) continue;
          const Idx y{b, wt};
          if (covered.count(t.key(y))) continue;
          Found f{{}, x, y};
          f.keys.reserve(2 * m);
          bool regular = true;
          std::fill(seen.begin(), seen.end(), 0);
          for (std::uint64_t k = 0; k < m && regular; ++k) {
            const Idx xy = t.mul(pw[k], y);
            for (const Idx g : {pw[k], xy}) {
              if (seen[g.trans]) regular = false;
              seen[g.trans] = 1;
              f.keys.push_back(t.key(g));
            }
            covered.insert(t.key(xy));
          }
          if (!regular) continue;
          std::sort(f.keys.begin(), f.keys.end());
          partial[w].push_back(std::move(f));
        }
      }
      for (std::uint64_t k = 0; k < m; ++k) in_orbit[t.act(pw[k], 0)] = 0;
    }
  });

  std::vector<Found> all;
  for (auto& p : partial) {
    for (auto& f : p) all.push_back(std::move(f));
  }
  std::sort(all.begin(), all.end(), [&](const Found& a, const Found& b) {
    if (a.keys != b.keys) return a.keys < b.keys;
    if (a.x != b.x) return t.key(a.x) < t.key(b.x);
    return t.key(a.y) < t.key(b.y);
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Found& a, const Found& b) { return a.keys == b.keys; }),
            all.end());
  return all;
}

Found conjugate_found(const HolTable& t, std::uint32_t alpha, const Found& f) {
  Found out;
  out.keys.reserve(f.keys.size());
  for (const std::uint64_t k : f.keys) out.keys.push_back(t.key(t.conj(alpha, t.from_key(k))));
  std::sort(out.keys.begin(), out.keys.end());
  out.x = t.conj(alpha, f.x);
  out.y = t.conj(alpha, f.y);
  return out;
}

// BFS over Aut generators. The returned orbit starts with f.
std::vector<Found> orbit_of(const HolTable& t, const Found& f) {
  const auto& gens = t.aut_group().generators();
  std::unordered_set<Keys, KeysHash> seen{f.keys};
  std::vector<Found> orbit{f};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const std::size_t g : gens) {
      Found next = conjugate_found(t, static_cast<std::uint32_t>(g), orbit[head]);
      if (seen.insert(next.keys).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

}  // namespace

std::vector<HolElement> RegularSubgroup::decoded() const {
  std::vector<HolElement> out;
  out.reserve(elements.size());
  for (const std::uint64_t c : elements) out.push_back(hol_decode(group, c));
  return out;
}

bool is_regular(const GroupSpec& group, const std::vector<HolElement>& elems) {
  if (elems.size() != group.order()) {
    throw InvalidInput("a regular subgroup of Hol(" + group.name() + ") has " +
                       std::to_string(group.order()) + " elements, got " +
                       std::to_string(elems.size()));
  }
  std::set<Element> trans;
  for (const auto& e : elems) trans.insert(e.trans);
  return trans.size() == group.order();
}

std::vector<HolElement> generate_closure(const GroupSpec& group, const std::vector<HolElement>& gens,
                                         std::uint64_t cap) {
  std::map<std::uint64_t, HolElement> seen;
  const HolElement id = hol_identity(group);
  seen.emplace(hol_encode(group, id), id);
  std::deque<HolElement> queue{id};
  while (!queue.empty()) {
    const HolElement cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      HolElement next = hol_compose(group, cur, g);
      if (seen.emplace(hol_encode(group, next), next).second) {
        if (seen.size() > cap) {
          throw CapacityError("closure exceeds " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<HolElement> out;
  out.reserve(seen.size());
  for (auto& [code, e] : seen) out.push_back(std::move(e));
  return out;
}

struct Enumerator::Impl {
  std::once_flag built;
  std::unique_ptr<HolTable> table;
};

Enumerator::Enumerator(GroupSpec group, EngineOptions opts)
    : group_(std::move(group)), opts_(opts), impl_(std::make_unique<Impl>()) {}
Enumerator::~Enumerator() = default;
Enumerator::Enumerator(Enumerator&&) noexcept = default;
Enumerator& Enumerator::operator=(Enumerator&&) noexcept = default;

const HolTable& Enumerator::table() const {
  std::call_once(impl_->built, [this] {
    impl_->table = std::make_unique<HolTable>(enumerate_aut(group_, opts_.cap));
  });
  return *impl_->table;
}

namespace {

void check_kind(const GroupSpec& group, const TargetKind& kind) {
  if (kind.order() != group.order()) {
    throw InvalidInput(kind.name() + " has order " + std::to_string(kind.order()) + " but |" +
                       group.name() + "| = " + std::to_string(group.order()));
  }
}

RegularSubgroup to_subgroup(const HolTable& t, const TargetKind& kind, const Found& f) {
  RegularSubgroup s;
  s.group = t.group();
  s.kind = kind;
  s.elements.reserve(f.keys.size());
  // Keys and codes sort the same way.
  for (const std::uint64_t k : f.keys) s.elements.push_back(t.encode(t.from_key(k)));
  s.x = t.encode(f.x);
  s.y = t.encode(f.y);
  return s;
}

Found from_subgroup(const HolTable& t, const RegularSubgroup& s) {
  if (!(s.group == t.group())) throw InvalidInput("subgroup belongs to a different N");
  Found f;
  f.keys.reserve(s.elements.size());
  for (const std::uint64_t c : s.elements) f.keys.push_back(t.key(t.decode(c)));
  std::sort(f.keys.begin(), f.keys.end());
  f.x = t.decode(s.x);
  f.y = t.decode(s.y);
  return f;
}

}  // namespace

std::string Enumerator::path_for(const TargetKind& kind) const {
  check_kind(group_, kind);
  const std::uint64_t hol = aut_group_order(group_) * group_.order();
  if (hol <= opts_.full_hol_limit) return "full";
  if (group_.is_p_group() && group_.blocks().front().p == 2) return "sylow";
  if (hol <= opts_.cap) return "full";
  throw CapacityError("|Hol(" + group_.name() + ")| = " + std::to_string(hol) +
                      " exceeds the cap " + std::to_string(opts_.cap) +
                      " and no Sylow-restricted path applies");
}

std::vector<RegularSubgroup> Enumerator::find_regular(const TargetKind& kind) const {
  return path_for(kind) == "sylow" ? find_regular_sylow(kind) : find_regular_full(kind);
}

std::vector<RegularSubgroup> Enumerator::find_regular_full(const TargetKind& kind) const {
  check_kind(group_, kind);
  const std::uint64_t hol = aut_group_order(group_) * group_.order();
  if (hol > opts_.cap) {
    throw CapacityError("|Hol(" + group_.name() + ")| = " + std::to_string(hol) +
                        " exceeds the cap " + std::to_string(opts_.cap));
  }
  const HolTable& t = table();
  std::vector<RegularSubgroup> out;
  for (const auto& f : search(t, kind, {}, opts_.resolved_workers())) {
    out.push_back(to_subgroup(t, kind, f));
  }
  return out;
}

std::vector<RegularSubgroup> Enumerator::find_regular_sylow(const TargetKind& kind) const {
  check_kind(group_, kind);
  if (!group_.is_p_group() || group_.blocks().front().p != 2) {
    throw InvalidInput("the Sylow path needs a 2-group, got " + group_.name());
  }
  // Search N x| P on its own first; Aut(N) is only built for the orbit
  // expansion, so an empty answer never needs it.
  std::vector<Automorphism> sylow;
  for (auto& m : sylow_p_aut(group_, 2, opts_.cap)) sylow.push_back(Automorphism{{std::move(m)}});
  const HolTable tp(AutGroup(group_, std::move(sylow)));
  const auto found_p = search(tp, kind, {}, opts_.resolved_workers());
  if (found_p.empty()) return {};
  const HolTable& t = table();
  std::vector<Found> seeds;
  for (const auto& f : found_p) {
    Found g;
    for (const std::uint64_t k : f.keys) g.keys.push_back(t.key(t.decode(tp.encode(tp.from_key(k)))));
    std::sort(g.keys.begin(), g.keys.end());
    g.x = t.decode(tp.encode(f.x));
    g.y = t.decode(tp.encode(f.y));
    seeds.push_back(std::move(g));
  }
  std::unordered_set<Keys, KeysHash> seen;
  std::vector<Found> all;
  for (const auto& f : seeds) {
    if (seen.count(f.keys)) continue;
    for (auto& g : orbit_of(t, f)) {
      seen.insert(g.keys);
      all.push_back(std::move(g));
    }
  }
  std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) { return a.keys < b.keys; });
  std::vector<RegularSubgroup> out;
  out.reserve(all.size());
  for (const auto& f : all) out.push_back(to_subgroup(t, kind, f));
  return out;
}

RegularSubgroup Enumerator::conjugate(std::uint32_t alpha, const RegularSubgroup& s) const {
  const HolTable& t = table();
  if (alpha >= t.aut_count()) throw InvalidInput("automorphism index out of range");
  return to_subgroup(t, s.kind, conjugate_found(t, alpha, from_subgroup(t, s)));
}

std::vector<RegularSubgroup> Enumerator::orbit(const RegularSubgroup& s) const {
  const HolTable& t = table();
  std::vector<RegularSubgroup> out;
  for (const auto& f : orbit_of(t, from_subgroup(t, s))) out.push_back(to_subgroup(t, s.kind, f));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Enumerator::stabilizer_exhaustive(const RegularSubgroup& s) const {
  const HolTable& t = table();
  const Found f = from_subgroup(t, s);
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < t.aut_count(); ++a) {
    bool fixed = true;
    for (const std::uint64_t k : f.keys) {
      if (!std::binary_search(f.keys.begin(), f.keys.end(), t.key(t.conj(a, t.from_key(k))))) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

std::vector<ConjugacyClass> Enumerator::classify(const std::vector<RegularSubgroup>& subgroups) const {
  if (subgroups.empty()) return {};
  const HolTable& t = table();
  std::vector<Found> input;
  input.reserve(subgroups.size());
  for (const auto& s : subgroups) input.push_back(from_subgroup(t, s));
  std::sort(input.begin(), input.end(), [](const Found& a, const Found& b) { return a.keys < b.keys; });

  std::unordered_set<Keys, KeysHash> assigned;
  std::vector<ConjugacyClass> out;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (assigned.count(input[i].keys)) continue;
    const auto orb = orbit_of(t, input[i]);
    const Found* rep = &orb.front();
    for (const auto& g : orb) {
      assigned.insert(g.keys);
      if (g.keys < rep->keys) rep = &g;
    }
    ConjugacyClass cls;
    cls.representative = to_subgroup(t, subgroups.front().kind, *rep);
    cls.orbit_size = orb.size();
    const std::uint64_t aut = t.aut_count();
    if (aut % cls.orbit_size != 0) throw InternalError("orbit size does not divide |Aut(N)|");
    cls.stabilizer_order = aut / cls.orbit_size;
    if (aut <= opts_.exhaustive_stabilizer_limit &&
        stabilizer_exhaustive(cls.representative) != cls.stabilizer_order) {
      throw InternalError("orbit-stabilizer identity fails for " + group_.name());
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.representative.elements < b.representative.elements;
  });
  return out;
}

Census Enumerator::census(const TargetKind& kind) const {
  Census c;
  c.group = group_;
  c.kind = kind;
  c.path = path_for(kind);
  const auto subs = find_regular(kind);
  c.classes = classify(subs);
  c.c = c.classes.size();
  c.r = subs.size();
  std::uint64_t total = 0;
  for (const auto& cls : c.classes) total += cls.orbit_size;
  if (total != c.r) {
    throw InternalError("orbit sizes sum to " + std::to_string(total) + " but " +
                        std::to_string(c.r) + " subgroups were found");
  }
  return c;
}

RegularSubgroup Enumerator::make_subgroup(const std::vector<HolElement>& elems) const {
  if (!is_regular(group_, elems)) throw InvalidInput("element set is not regular");
  const FiniteGroup g = subgroup_table(group_, elems);
  const auto rec = recognize(g);
  if (!rec) throw InvalidInput("subgroup is neither quaternion nor dihedral");
  RegularSubgroup s;
  s.group = group_;
  s.kind = rec->kind;
  for (const auto& e : elems) s.elements.push_back(hol_encode(group_, e));
  std::sort(s.elements.begin(), s.elements.end());
  s.x = hol_encode(group_, elems[rec->x]);
  s.y = hol_encode(group_, elems[rec->y]);
  return s;
}

std::vector<RegularSubgroup> find_regular(const GroupSpec& group, const TargetKind& kind,
                                          const EngineOptions& opts) {
  return Enumerator(group, opts).find_regular(kind);
}

}  // namespace holobrace
