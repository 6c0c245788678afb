#include "holobrace/counts.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "holobrace/error.hpp"
#include "holobrace/reduce.hpp"
#include "holobrace/structured.hpp"
#include "json.hpp"

namespace holobrace {

namespace {

bool odd_part_cyclic(const GroupSpec& g) {
  for (const auto& b : g.blocks()) {
    if (b.p != 2 && b.rank() != 1) return false;
  }
  return true;
}

GroupSpec with_odd(std::uint64_t s, const GroupSpec& two) {
  return s == 1 ? two : GroupSpec::product(GroupSpec::from_orders({s}), two);
}

std::vector<GroupSpec> table_types(int n) {
  if (n <= 4) return admissible_types(n);
  return {GroupSpec::from_orders({std::uint64_t{1} << n}), GroupSpec::from_orders({2, std::uint64_t{1} << (n - 1)})};
}

// Terminal columns of a UTF-8 string.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (const unsigned char ch : s) w += (ch & 0xC0) != 0x80;
  return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

std::string render(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i] + 2);
    }
    out += line + "\n";
  }
  return out;
}

std::string num(const CountRow& row, std::uint64_t v) { return row.skipped ? "-" : std::to_string(v); }

void add_aggregate(std::vector<Aggregate>& aggs, const CountRow& row) {
  auto it = std::find_if(aggs.begin(), aggs.end(), [&](const Aggregate& a) { return a.kind == row.kind; });
  if (it == aggs.end()) {
    aggs.push_back({row.kind});
    it = aggs.end() - 1;
  }
  if (row.skipped) {
    it->complete = false;
  } else {
    it->braces += row.c;
    it->hgs += row.h;
  }
}

std::string table_title(const TableScope& scope) {
  switch (scope.which) {
    case 1:
      return "braces c, regular subgroups r and Hopf-Galois structures h of orders 4, 8, 16";
    case 3:
      return "quaternion and dihedral braces by additive group, s = " + std::to_string(scope.s);
    default:
      return "Hopf-Galois structures by abelian type, s = " + std::to_string(scope.s);
  }
}

}  // namespace

Census compute_census(const GroupSpec& group, const TargetKind& kind, CensusPath path, const EngineOptions& opts) {
  if (group.order() != kind.order()) {
    throw InvalidInput("|N| = " + std::to_string(group.order()) + " but |" + kind.name() +
                       "| = " + std::to_string(kind.order()));
  }
  switch (path) {
    case CensusPath::structured: {
      auto c = structured_census(group, kind);
      if (!c) throw InvalidInput("no family solver applies to " + group.name() + " with " + kind.name());
      return *c;
    }
    case CensusPath::reduction:
      return reduce_census(group, kind, opts);
    case CensusPath::enumeration:
      return Enumerator(group, opts).census(kind);
    case CensusPath::automatic:
      break;
  }
  if (auto c = structured_census(group, kind)) return *c;
  if (kind.s >= 3 && odd_part_cyclic(group)) return reduce_census(group, kind, opts);
  return Enumerator(group, opts).census(kind);
}

std::uint64_t hgs_count(const TargetKind& g, const GroupSpec& n, std::uint64_t r) {
  const unsigned __int128 num = static_cast<unsigned __int128>(aut_order(g)) * r;
  const std::uint64_t den = aut_group_order(n);
  if (num % den != 0) {
    throw InternalError("|Aut(" + g.name() + ")| r = " + std::to_string(aut_order(g)) + " * " + std::to_string(r) +
                        " is not divisible by |Aut(" + n.name() + ")| = " + std::to_string(den));
  }
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t q_closed(std::uint64_t m) {
  if (m < 3) throw DomainError("closed forms need m >= 3, got " + std::to_string(m));
  if (m % 2 == 1) return 2;
  if (m % 4 == 2) return 6;
  return m % 8 == 4 ? 9 : 7;
}

std::uint64_t d_closed(std::uint64_t m) {
  if (m < 3) throw DomainError("closed forms need m >= 3, got " + std::to_string(m));
  if (m % 2 == 1) return 3;
  if (m % 4 == 2) return 8;
  return 7;
}

std::uint64_t hgs_reduce(const GroupSpec& n, const TargetKind& g, const EngineOptions& opts) {
  const SylowSplit split = sylow_decompose(n);
  if (!odd_part_cyclic(n) || split.odd.order() != g.s || split.two.order() != g.two_part().order()) {
    throw InvalidInput(n.name() + " is not C_s x N_2 for " + g.name());
  }
  const TargetKind g2 = g.two_part();
  return hgs_count(g2, split.two, two_part_census(split.two, g2, opts).r) * g.s;
}

CountRow count_row(const GroupSpec& group, const TargetKind& kind, CensusPath path, const EngineOptions& opts) {
  CountRow row;
  row.group = group;
  row.kind = kind;
  try {
    const Census c = compute_census(group, kind, path, opts);
    row.c = c.c;
    row.r = c.r;
    row.h = hgs_count(kind, group, c.r);
    row.path = c.path;
  } catch (const CapacityError& e) {
    row.skipped = true;
    row.note = e.what();
  }
  return row;
}

CountReport table_report(const TableScope& scope, const EngineOptions& opts, const Progress& progress) {
  if (scope.which != 1 && scope.which != 3 && scope.which != 4) throw InvalidInput("tables are 1, 3 and 4");
  if (scope.s == 0 || scope.s % 2 == 0) throw InvalidInput("s must be odd");
  if (scope.which != 1 && (scope.n_max < 2 || scope.n_max > 16)) throw InvalidInput("n-max must be between 2 and 16");
  CountReport report;
  report.scope = scope;
  auto note = [&](const GroupSpec& g, const TargetKind& k) {
    if (progress) progress("census " + g.display_name() + " " + k.display_name());
  };

  if (scope.which == 1) {
    for (int n = 2; n <= 4; ++n) {
      for (const Kind kind : {Kind::quaternion, Kind::dihedral}) {
        for (const auto& g : admissible_types(n)) {
          note(g, TargetKind(kind, n));
          report.rows.push_back(count_row(g, TargetKind(kind, n), CensusPath::enumeration, opts));
        }
      }
    }
  } else {
    std::map<std::pair<std::string, std::string>, Census> base;
    for (int n = 2; n <= scope.n_max; ++n) {
      for (const auto& two : table_types(n)) {
        for (const Kind kind : {Kind::quaternion, Kind::dihedral}) {
          const TargetKind k(kind, n, scope.s);
          const TargetKind k2(kind, n);
          const GroupSpec g = with_odd(scope.s, two);
          note(g, k);
          CountRow row;
          row.group = g;
          row.kind = k;
          try {
            auto key = std::pair{two.name(), k2.name()};
            auto it = base.find(key);
            if (it == base.end()) it = base.emplace(key, two_part_census(two, k2, opts)).first;
            const Census c = scope.s == 1 ? it->second : reduce_census(g, k, opts, &it->second);
            row.c = c.c;
            row.r = c.r;
            row.path = c.path;
            row.h = hgs_count(k, g, c.r);
            if (row.h != hgs_count(k2, two, it->second.r) * scope.s) {
              throw InternalError("h(" + g.name() + ", " + k.name() + ") is not s h(N_2, J_2)");
            }
          } catch (const CapacityError& e) {
            row.skipped = true;
            row.note = e.what();
          }
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  for (const auto& row : report.rows) add_aggregate(report.aggregates, row);
  return report;
}

std::string format_text(const CountReport& report) {
  std::string out = "# " + table_title(report.scope) + "\n";
  std::vector<std::vector<std::string>> cells;
  if (report.scope.which == 1) {
    cells.push_back({"N", "G", "c", "r", "h"});
    for (const auto& row : report.rows) {
      cells.push_back({row.group.display_name(), row.kind.display_name(), num(row, row.c), num(row, row.r),
                       num(row, row.h)});
    }
  } else {
    const bool braces = report.scope.which == 3;
    cells.push_back({"N", "quaternion", "dihedral"});
    // Rows come in (quaternion, dihedral) pairs per N.
    for (std::size_t i = 0; i + 1 < report.rows.size(); i += 2) {
      const auto& q = report.rows[i];
      const auto& d = report.rows[i + 1];
      cells.push_back({q.group.display_name(), num(q, braces ? q.c : q.h), num(d, braces ? d.c : d.h)});
    }
  }
  out += render(cells);
  out += "\n";
  std::vector<std::vector<std::string>> totals{{"G", "braces", "hgs"}};
  for (const auto& a : report.aggregates) {
    totals.push_back({a.kind.display_name(), a.complete ? std::to_string(a.braces) : "-",
                      a.complete ? std::to_string(a.hgs) : "-"});
  }
  out += render(totals);
  for (const auto& row : report.rows) {
    if (row.skipped) out += "skipped " + row.group.name() + " " + row.kind.name() + ": " + row.note + "\n";
  }
  return out;
}

std::string format_csv(const CountReport& report) {
  std::ostringstream out;
  out << "N,G,c,r,h,path\n";
  for (const auto& row : report.rows) {
    out << row.group.display_name() << ',' << row.kind.display_name() << ',' << num(row, row.c) << ','
        << num(row, row.r) << ',' << num(row, row.h) << ',' << (row.skipped ? "skipped" : row.path) << '\n';
  }
  return out.str();
}

std::string format_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["table"] = report.scope.which;
  if (report.scope.which != 1) {
    j["n_max"] = report.scope.n_max;
    j["s"] = report.scope.s;
  }
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["N"] = row.group.display_name();
    r["factors"] = row.group.factors();
    r["G"] = row.kind.display_name();
    if (row.skipped) {
      r["skipped"] = true;
      r["note"] = row.note;
    } else {
      r["c"] = row.c;
      r["r"] = row.r;
      r["h"] = row.h;
      r["path"] = row.path;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  auto aggs = nlohmann::ordered_json::array();
  for (const auto& a : report.aggregates) {
    nlohmann::ordered_json r;
    r["G"] = a.kind.display_name();
    r["complete"] = a.complete;
    r["braces"] = a.braces;
    r["hgs"] = a.hgs;
    aggs.push_back(std::move(r));
  }
  j["aggregates"] = std::move(aggs);
  return j.dump(2) + "\n";
}

ConjectureCheck verify_conjecture(std::uint64_t m, const EngineOptions& opts, const Progress& progress) {
  ConjectureCheck out;
  out.m = m;
  out.q_expected = q_closed(m);
  out.d_expected = d_closed(m);
  const TargetKind q = TargetKind::of_order(Kind::quaternion, 4 * m);
  const TargetKind d = TargetKind::of_order(Kind::dihedral, 4 * m);
  for (const auto& g : abelian_groups(4 * m)) {
    for (const auto& k : {q, d}) {
      if (progress) progress("census " + g.display_name() + " " + k.display_name());
      CountRow row = count_row(g, k, CensusPath::automatic, opts);
      if (row.skipped) {
        out.complete = false;
      } else {
        (k.is_quaternion() ? out.q_computed : out.d_computed) += row.c;
      }
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

namespace {

nlohmann::ordered_json element_json(const GroupSpec& g, std::uint64_t code) {
  const HolElement e = hol_decode(g, code);
  nlohmann::ordered_json j;
  j["code"] = code;
  j["aut"] = nlohmann::ordered_json::parse(aut_to_json(e.aut));
  j["trans"] = std::vector<std::uint32_t>(e.trans.residues().begin(), e.trans.residues().end());
  return j;
}

}  // namespace

std::string census_to_json(const Census& census, const std::vector<Automorphism>& aut_generators) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["N"] = census.group.display_name();
  j["factors"] = census.group.factors();
  j["G"] = census.kind.display_name();
  j["c"] = census.c;
  j["r"] = census.r;
  j["h"] = hgs_count(census.kind, census.group, census.r);
  j["aut_N"] = aut_group_order(census.group);
  j["aut_G"] = aut_order(census.kind);
  j["path"] = census.path;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& cls : census.classes) {
    nlohmann::ordered_json c;
    c["orbit"] = cls.orbit_size;
    c["stabilizer"] = cls.stabilizer_order;
    c["x"] = element_json(census.group, cls.representative.x);
    c["y"] = element_json(census.group, cls.representative.y);
    c["elements"] = cls.representative.elements;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  if (!aut_generators.empty()) {
    auto gens = nlohmann::ordered_json::array();
    for (const auto& a : aut_generators) gens.push_back(nlohmann::ordered_json::parse(aut_to_json(a)));
    j["aut_generators"] = std::move(gens);
  }
  return j.dump(2) + "\n";
}

std::string spectrum_to_json(const GroupSpec& group, const std::map<std::uint64_t, std::uint64_t>& spectrum) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["N"] = group.display_name();
  j["factors"] = group.factors();
  std::uint64_t total = 0;
  for (const auto& [order, count] : spectrum) total += count;
  j["hol_order"] = total;
  j["max_order"] = spectrum.empty() ? 0 : spectrum.rbegin()->first;
  auto orders = nlohmann::ordered_json::array();
  for (const auto& [order, count] : spectrum) orders.push_back({{"order", order}, {"count", count}});
  j["orders"] = std::move(orders);
  return j.dump(2) + "\n";
}

}  // namespace holobrace
