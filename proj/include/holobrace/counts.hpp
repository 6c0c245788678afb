#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "holobrace/enumerate.hpp"

namespace holobrace {

enum class CensusPath { automatic, enumeration, structured, reduction };

// automatic: the family solver when it applies, else the reduction when s >= 3
// and the odd part is cyclic, else the generic engine. An explicit path that
// does not apply throws InvalidInput.
Census compute_census(const GroupSpec& group, const TargetKind& kind, CensusPath path = CensusPath::automatic,
                      const EngineOptions& opts = {});

// |Aut(G)| r / |Aut(N)|. InternalError if the division is not exact.
std::uint64_t hgs_count(const TargetKind& g, const GroupSpec& n, std::uint64_t r);

// Number of quaternion (dihedral) braces of order 4m. DomainError for m < 3.
std::uint64_t q_closed(std::uint64_t m);
std::uint64_t d_closed(std::uint64_t m);

// h(N_2, G_2) s, with the 2-part count from its census.
std::uint64_t hgs_reduce(const GroupSpec& n, const TargetKind& g, const EngineOptions& opts = {});

struct CountRow {
  GroupSpec group;
  TargetKind kind;
  std::uint64_t c = 0;
  std::uint64_t r = 0;
  std::uint64_t h = 0;
  std::string path;
  bool skipped = false;
  std::string note;
};

struct Aggregate {
  TargetKind kind;
  // Sums over the rows of this kind: q or d, and the HGS total.
  std::uint64_t braces = 0;
  std::uint64_t hgs = 0;
  bool complete = true;
};

struct TableScope {
  // 1: the orders 4, 8, 16 census. 3, 4: the additive-group tables for
  // 2 <= n <= n_max at odd part s.
  int which = 1;
  int n_max = 5;
  std::uint64_t s = 1;
};

struct CountReport {
  TableScope scope;
  std::vector<CountRow> rows;
  std::vector<Aggregate> aggregates;
};

using Progress = std::function<void(const std::string&)>;

// Rows that hit a CapacityError are kept with skipped = true.
CountReport table_report(const TableScope& scope, const EngineOptions& opts = {}, const Progress& progress = {});

std::string format_text(const CountReport& report);
std::string format_csv(const CountReport& report);
std::string format_json(const CountReport& report);

// q(4m) and d(4m) summed over every abelian N of order 4m.
struct ConjectureCheck {
  std::uint64_t m = 0;
  std::uint64_t q_expected = 0;
  std::uint64_t d_expected = 0;
  std::uint64_t q_computed = 0;
  std::uint64_t d_computed = 0;
  // False if some N could not be computed within the caps.
  bool complete = true;
  std::vector<CountRow> rows;

  bool ok() const { return complete && q_expected == q_computed && d_expected == d_computed; }
};

ConjectureCheck verify_conjecture(std::uint64_t m, const EngineOptions& opts = {}, const Progress& progress = {});

// Census row for one (N, G) via compute_census, with h filled in.
CountRow count_row(const GroupSpec& group, const TargetKind& kind, CensusPath path = CensusPath::automatic,
                   const EngineOptions& opts = {});

// {"schema": "v1", "N", "factors", "G", "c", "r", "h", "path", "classes": [...]}
// with each class's orbit size, stabilizer order, witnesses and elements.
// Non-empty `aut_generators` adds them under "aut_generators".
std::string census_to_json(const Census& census, const std::vector<Automorphism>& aut_generators = {});

// Element orders of Hol(N) with their multiplicities.
std::string spectrum_to_json(const GroupSpec& group, const std::map<std::uint64_t, std::uint64_t>& spectrum);

}  // namespace holobrace
