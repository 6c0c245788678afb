// holobrace command-line front end; talks to the engine only through the C API.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holobrace/holobrace.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kCapacity = 3, kInternal = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(hb_status s) {
  switch (s) {
    case HB_OK: return kOk;
    case HB_CAPACITY: return kCapacity;
    case HB_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(hb_status s, const std::string& context) {
  if (s != HB_OK) throw Failure{exit_for(s), context + ": " + hb_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { hb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct OptionsDeleter {
  void operator()(hb_options* o) const { hb_options_free(o); }
};
struct CensusDeleter {
  void operator()(hb_census* c) const { hb_census_free(c); }
};
struct BraceDeleter {
  void operator()(hb_brace* b) const { hb_brace_free(b); }
};
using Options = std::unique_ptr<hb_options, OptionsDeleter>;
using CensusPtr = std::unique_ptr<hb_census, CensusDeleter>;
using BracePtr = std::unique_ptr<hb_brace, BraceDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void to_stderr(const char* msg, void*) { std::fprintf(stderr, "%s\n", msg); }

struct Global {
  unsigned workers = 0;
  std::uint64_t cap = 0;
  bool quiet = false;
};

Options make_options(const Global& g) {
  hb_options* raw = nullptr;
  check(hb_options_new(&raw), "options");
  Options opts(raw);
  if (g.workers) check(hb_options_set_workers(opts.get(), g.workers), "--workers");
  if (g.cap) check(hb_options_set_cap(opts.get(), g.cap), "--cap");
  if (!g.quiet) check(hb_options_set_progress(opts.get(), to_stderr, nullptr), "progress");
  return opts;
}

void progress(const Global& g, const std::string& msg) {
  if (!g.quiet) std::fprintf(stderr, "%s\n", msg.c_str());
}

CensusPtr compute(const std::string& n, const std::string& g, hb_path path, const hb_options* opts) {
  hb_census* raw = nullptr;
  check(hb_census_compute(n.c_str(), g.c_str(), path, opts, &raw), "census " + n + " " + g);
  return CensusPtr(raw);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> class_profile(const hb_census* c) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t i = 0; i < hb_census_c(c); ++i) {
    std::uint64_t orbit = 0, stab = 0;
    check(hb_census_class(c, i, &orbit, &stab), "class");
    out.emplace_back(orbit, stab);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kUsage, "cannot write " + path};
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Prints the first differing line; true if equal.
bool same_text(const std::string& got, const std::string& want) {
  if (got == want) return true;
  std::istringstream a(got), b(want);
  std::string la, lb;
  for (int line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(a, la));
    const bool hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) break;
    if (!ha || !hb || la != lb) {
      std::fprintf(stderr, "golden mismatch at line %d\n  expected: %s\n  got:      %s\n", line,
                   hb ? lb.c_str() : "<eof>", ha ? la.c_str() : "<eof>");
      break;
    }
  }
  return false;
}

struct CensusArgs {
  std::string n, g;
  bool structured = false, reduction = false, enumerate = false, cross_check = false, dump_aut = false;
  std::string out;
};

int run_census(const Global& gl, const CensusArgs& a) {
  hb_path path = HB_PATH_AUTO;
  if (a.structured) path = HB_PATH_STRUCTURED;
  if (a.reduction) path = HB_PATH_REDUCTION;
  if (a.enumerate) path = HB_PATH_ENUMERATION;
  const Options opts = make_options(gl);
  const CensusPtr census = compute(a.n, a.g, path, opts.get());
  char* json = nullptr;
  check(hb_census_to_json(census.get(), a.dump_aut ? 1 : 0, opts.get(), &json), "census json");
  write_output(take(json), a.out);
  if (!a.cross_check) return kOk;

  progress(gl, "cross-check: direct enumeration");
  hb_census* raw = nullptr;
  const hb_status s = hb_census_compute(a.n.c_str(), a.g.c_str(), HB_PATH_ENUMERATION, opts.get(), &raw);
  if (s == HB_CAPACITY) {
    std::fprintf(stderr, "cross-check skipped: %s\n", hb_last_error());
    return kOk;
  }
  check(s, "cross-check");
  const CensusPtr direct(raw);
  const bool same = hb_census_c(census.get()) == hb_census_c(direct.get()) &&
                    hb_census_r(census.get()) == hb_census_r(direct.get()) &&
                    class_profile(census.get()) == class_profile(direct.get());
  std::fprintf(stderr, "cross-check %s: %s c=%llu r=%llu, enumeration c=%llu r=%llu\n", same ? "ok" : "MISMATCH",
               hb_census_path(census.get()), static_cast<unsigned long long>(hb_census_c(census.get())),
               static_cast<unsigned long long>(hb_census_r(census.get())),
               static_cast<unsigned long long>(hb_census_c(direct.get())),
               static_cast<unsigned long long>(hb_census_r(direct.get())));
  return same ? kOk : kMismatch;
}

int run_spectrum(const Global& gl, const std::string& n, const std::string& format, const std::string& out) {
  const Options opts = make_options(gl);
  char* raw = nullptr;
  check(hb_spectrum_json(n.c_str(), opts.get(), &raw), "spectrum " + n);
  const std::string json = take(raw);
  if (format == "json") {
    write_output(json, out);
    return kOk;
  }
  const auto j = nlohmann::json::parse(json);
  std::string csv = "order,count\n";
  for (const auto& row : j["orders"]) {
    csv += std::to_string(row["order"].get<std::uint64_t>()) + "," + std::to_string(row["count"].get<std::uint64_t>()) +
           "\n";
  }
  write_output(csv, out);
  return kOk;
}

struct TablesArgs {
  int which = 1;
  int n_max = 5;
  std::uint64_t s = 1;
  std::string format = "text";
  std::string golden;
  std::string out;
};

int run_tables(const Global& gl, const TablesArgs& a) {
  const Options opts = make_options(gl);
  hb_format f = HB_FORMAT_TEXT;
  if (a.format == "csv") f = HB_FORMAT_CSV;
  if (a.format == "json") f = HB_FORMAT_JSON;
  char* raw = nullptr;
  check(hb_table(a.which, a.n_max, a.s, f, opts.get(), &raw), "tables");
  const std::string text = take(raw);
  write_output(text, a.out);
  if (a.golden.empty()) return kOk;
  if (!same_text(text, read_file(a.golden))) return kMismatch;
  progress(gl, "golden match: " + a.golden);
  return kOk;
}

int run_conjecture(const Global& gl, std::uint64_t m_min, std::uint64_t m_max, const std::string& out) {
  if (m_min < 3 || m_max < m_min) throw Failure{kUsage, "need 3 <= --m-min <= --m-max"};
  const Options opts = make_options(gl);
  nlohmann::ordered_json doc;
  doc["schema"] = "v1";
  auto results = nlohmann::ordered_json::array();
  bool mismatch = false;
  for (std::uint64_t m = m_min; m <= m_max; ++m) {
    int ok = 0;
    char* raw = nullptr;
    check(hb_verify_conjecture(m, opts.get(), &ok, &raw), "verify-conjecture m=" + std::to_string(m));
    auto r = nlohmann::ordered_json::parse(take(raw));
    const bool complete = r["complete"].get<bool>();
    if (complete && !ok) mismatch = true;
    progress(gl, "m=" + std::to_string(m) + (complete ? (ok ? " ok" : " MISMATCH") : " incomplete"));
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  doc["ok"] = !mismatch;
  write_output(doc.dump(2) + "\n", out);
  return mismatch ? kMismatch : kOk;
}

struct BraceArgs {
  std::string n, g, in, out;
  std::size_t index = 0;
  bool all = false;
};

BracePtr brace_from_census(const hb_census* c, std::size_t index) {
  hb_brace* raw = nullptr;
  check(hb_brace_from_census(c, index, &raw), "brace of class " + std::to_string(index));
  return BracePtr(raw);
}

int run_brace_export(const Global& gl, const BraceArgs& a) {
  const Options opts = make_options(gl);
  const CensusPtr census = compute(a.n, a.g, HB_PATH_AUTO, opts.get());
  const std::size_t c = hb_census_c(census.get());
  if (!a.all && a.index >= c) {
    throw Failure{kUsage, "class " + std::to_string(a.index) + " out of range; census has " + std::to_string(c)};
  }
  auto export_one = [&](std::size_t i) {
    const BracePtr b = brace_from_census(census.get(), i);
    char* raw = nullptr;
    check(hb_brace_to_json(b.get(), &raw), "brace json");
    return nlohmann::ordered_json::parse(take(raw));
  };
  if (!a.all) {
    write_output(export_one(a.index).dump() + "\n", a.out);
    return kOk;
  }
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c; ++i) arr.push_back(export_one(i));
  write_output(arr.dump() + "\n", a.out);
  return kOk;
}

nlohmann::ordered_json ybe_report(const hb_brace* b) {
  nlohmann::ordered_json r;
  r["order"] = hb_brace_order(b);
  int ok = 0;
  char* failure = nullptr;
  check(hb_brace_verify(b, &ok, &failure), "verify");
  r["brace"] = ok != 0;
  if (!ok) {
    r["failure"] = take(failure);
    return r;
  }
  int left = 0, right = 0;
  check(hb_brace_ybe_check(b, &left, &right), "ybe");
  r["involutive"] = true;
  r["braid"] = true;
  r["left_nondegenerate"] = left != 0;
  r["right_nondegenerate"] = right != 0;
  return r;
}

int run_ybe_check(const Global& gl, const BraceArgs& a) {
  std::vector<BracePtr> braces;
  if (!a.in.empty()) {
    const auto doc = nlohmann::json::parse(read_file(a.in), nullptr, false);
    if (doc.is_discarded()) throw Failure{kUsage, a.in + ": not JSON"};
    std::vector<std::string> texts;
    if (doc.is_array()) {
      for (const auto& d : doc) texts.push_back(d.dump());
    } else {
      texts.push_back(doc.dump());
    }
    for (const auto& t : texts) {
      hb_brace* raw = nullptr;
      check(hb_brace_from_json(t.c_str(), &raw), a.in);
      braces.emplace_back(raw);
    }
  } else {
    if (a.n.empty() || a.g.empty()) throw Failure{kUsage, "ybe-check needs --in or both --N and --G"};
    const Options opts = make_options(gl);
    const CensusPtr census = compute(a.n, a.g, HB_PATH_AUTO, opts.get());
    const std::size_t c = hb_census_c(census.get());
    for (std::size_t i = 0; i < c; ++i) {
      if (!a.all && i != a.index) continue;
      braces.push_back(brace_from_census(census.get(), i));
    }
    if (braces.empty() && !a.all) throw Failure{kUsage, "class " + std::to_string(a.index) + " out of range"};
  }
  nlohmann::ordered_json doc;
  doc["schema"] = "v1";
  auto results = nlohmann::ordered_json::array();
  bool all_ok = true;
  for (const auto& b : braces) {
    auto r = ybe_report(b.get());
    all_ok = all_ok && r["brace"].get<bool>();
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  doc["ok"] = all_ok;
  write_output(doc.dump(2) + "\n", a.out);
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion and dihedral braces from regular subgroups of abelian holomorphs"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--workers", gl.workers, "worker threads (default: all cores)");
  app.add_option("--cap", gl.cap, "enumeration cap (default: HOLOBRACE_CAP or built-in)")->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", gl.quiet, "no progress on stderr");

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "classes of regular Q/D subgroups of Hol(N)");
  census->add_option("--N", ca.n, "abelian group, e.g. c2xc8")->required();
  census->add_option("--G", ca.g, "target, e.g. q16 or d24")->required();
  auto* f_struct = census->add_flag("--structured", ca.structured, "family solver");
  auto* f_red = census->add_flag("--via-reduction", ca.reduction, "odd-part reduction");
  auto* f_enum = census->add_flag("--enumerate", ca.enumerate, "generic search");
  f_struct->excludes(f_red)->excludes(f_enum);
  f_red->excludes(f_enum);
  census->add_flag("--cross-check", ca.cross_check, "also run the generic search and compare");
  census->add_flag("--dump-aut", ca.dump_aut, "include generators of Aut(N)");
  census->add_option("-o,--out", ca.out, "output file");

  std::string sp_n, sp_format = "json", sp_out;
  auto* spectrum = app.add_subcommand("spectrum", "element orders of Hol(N)");
  spectrum->add_option("--N", sp_n)->required();
  spectrum->add_option("--format", sp_format)->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("-o,--out", sp_out);

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "count tables");
  tables->add_option("--which", ta.which)->required()->check(CLI::IsMember({1, 3, 4}));
  tables->add_option("--n-max", ta.n_max)->check(CLI::Range(2, 12));
  tables->add_option("--s", ta.s)->check(CLI::PositiveNumber);
  tables->add_option("--format", ta.format)->check(CLI::IsMember({"text", "csv", "json"}));
  tables->add_option("--golden", ta.golden, "expected output; exit 2 on difference")->check(CLI::ExistingFile);
  tables->add_option("-o,--out", ta.out);

  std::uint64_t m_min = 3, m_max = 12;
  std::string vc_out;
  auto* conj = app.add_subcommand("verify-conjecture", "closed forms against computed censuses");
  conj->add_option("--m-max", m_max)->required();
  conj->add_option("--m-min", m_min);
  conj->add_option("-o,--out", vc_out);

  BraceArgs ba;
  auto* bexp = app.add_subcommand("brace-export", "brace table of a census class as JSON");
  bexp->add_option("--N", ba.n)->required();
  bexp->add_option("--G", ba.g)->required();
  bexp->add_option("--class", ba.index, "class index (default 0)");
  bexp->add_flag("--all", ba.all, "every class, as an array");
  bexp->add_option("-o,--out", ba.out);

  BraceArgs ya;
  auto* ybe = app.add_subcommand("ybe-check", "brace axioms and the YBE solution of a brace");
  ybe->add_option("--in", ya.in, "brace JSON from brace-export")->check(CLI::ExistingFile);
  ybe->add_option("--N", ya.n);
  ybe->add_option("--G", ya.g);
  ybe->add_option("--class", ya.index);
  ybe->add_flag("--all", ya.all);
  ybe->add_option("-o,--out", ya.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*census) return run_census(gl, ca);
    if (*spectrum) return run_spectrum(gl, sp_n, sp_format, sp_out);
    if (*tables) return run_tables(gl, ta);
    if (*conj) return run_conjecture(gl, m_min, m_max, vc_out);
    if (*bexp) return run_brace_export(gl, ba);
    if (*ybe) return run_ybe_check(gl, ya);
  } catch (const Failure& f) {
    std::fprintf(stderr, "holobrace: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "holobrace: %s\n", e.what());
    return kInternal;
  }
  return kUsage;
}
