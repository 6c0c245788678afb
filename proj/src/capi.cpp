#include "holobrace/holobrace.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"

#include "holobrace/brace.hpp"
#include "holobrace/counts.hpp"
#include "holobrace/endo.hpp"
#include "holobrace/error.hpp"
#include "holobrace/holomorph.hpp"

struct hb_options {
  holobrace::EngineOptions engine;
  hb_progress_fn progress = nullptr;
  void* user = nullptr;
};

struct hb_census {
  holobrace::Census census;
};

struct hb_brace {
  holobrace::BraceTable table;
};

namespace {

thread_local std::string g_last_error;

hb_status fail(hb_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs f, translating exceptions into status codes.
template <class F>
hb_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return HB_OK;
  } catch (const holobrace::InvalidInput& e) {
    return fail(HB_INVALID_INPUT, e.what());
  } catch (const holobrace::CapacityError& e) {
    return fail(HB_CAPACITY, e.what());
  } catch (const holobrace::DomainError& e) {
    return fail(HB_DOMAIN, e.what());
  } catch (const holobrace::InternalError& e) {
    return fail(HB_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HB_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HB_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

holobrace::EngineOptions engine_of(const hb_options* opts) {
  return opts ? opts->engine : holobrace::EngineOptions::from_env();
}

holobrace::Progress progress_of(const hb_options* opts) {
  if (!opts || !opts->progress) return {};
  return [fn = opts->progress, user = opts->user](const std::string& msg) { fn(msg.c_str(), user); };
}

holobrace::CensusPath path_of(hb_path p) {
  switch (p) {
    case HB_PATH_AUTO: return holobrace::CensusPath::automatic;
    case HB_PATH_ENUMERATION: return holobrace::CensusPath::enumeration;
    case HB_PATH_STRUCTURED: return holobrace::CensusPath::structured;
    case HB_PATH_REDUCTION: return holobrace::CensusPath::reduction;
  }
  throw holobrace::InvalidInput("unknown census path " + std::to_string(static_cast<int>(p)));
}

#define HB_REQUIRE(ptr) \
  if (!(ptr)) return fail(HB_NULL_ARGUMENT, #ptr " is NULL")

}  // namespace

extern "C" {

const char* hb_version(void) { return "1.0.0"; }

const char* hb_last_error(void) { return g_last_error.c_str(); }

void hb_string_free(char* s) { delete[] s; }

hb_status hb_options_new(hb_options** out) {
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    auto* o = new hb_options;
    try {
      o->engine = holobrace::EngineOptions::from_env();
    } catch (...) {
      delete o;
      throw;
    }
    *out = o;
  });
}

void hb_options_free(hb_options* opts) { delete opts; }

hb_status hb_options_set_cap(hb_options* opts, uint64_t cap) {
  HB_REQUIRE(opts);
  if (cap == 0) return fail(HB_INVALID_INPUT, "cap must be positive");
  opts->engine.cap = cap;
  return HB_OK;
}

hb_status hb_options_set_workers(hb_options* opts, unsigned workers) {
  HB_REQUIRE(opts);
  opts->engine.workers = workers;
  return HB_OK;
}

hb_status hb_options_set_progress(hb_options* opts, hb_progress_fn fn, void* user) {
  HB_REQUIRE(opts);
  opts->progress = fn;
  opts->user = user;
  return HB_OK;
}

hb_status hb_census_compute(const char* n_spec, const char* g_spec, hb_path path, const hb_options* opts,
                            hb_census** out) {
  HB_REQUIRE(n_spec);
  HB_REQUIRE(g_spec);
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    const auto group = holobrace::GroupSpec::parse(n_spec);
    const auto kind = holobrace::TargetKind::parse(g_spec);
    *out = new hb_census{holobrace::compute_census(group, kind, path_of(path), engine_of(opts))};
  });
}

void hb_census_free(hb_census* c) { delete c; }

uint64_t hb_census_c(const hb_census* c) { return c ? c->census.c : 0; }
uint64_t hb_census_r(const hb_census* c) { return c ? c->census.r : 0; }

uint64_t hb_census_h(const hb_census* c) {
  if (!c) return 0;
  try {
    return holobrace::hgs_count(c->census.kind, c->census.group, c->census.r);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0;
  }
}

const char* hb_census_path(const hb_census* c) { return c ? c->census.path.c_str() : ""; }

hb_status hb_census_class(const hb_census* c, size_t index, uint64_t* orbit_size, uint64_t* stabilizer) {
  HB_REQUIRE(c);
  if (index >= c->census.classes.size()) return fail(HB_INVALID_INPUT, "class index out of range");
  const auto& cls = c->census.classes[index];
  if (orbit_size) *orbit_size = cls.orbit_size;
  if (stabilizer) *stabilizer = cls.stabilizer_order;
  return HB_OK;
}

hb_status hb_census_to_json(const hb_census* c, int dump_aut, const hb_options* opts, char** out) {
  HB_REQUIRE(c);
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    std::vector<holobrace::Automorphism> gens;
    if (dump_aut) {
      const auto aut = holobrace::enumerate_aut(c->census.group, engine_of(opts).cap);
      for (std::size_t i : aut.generators()) gens.push_back(aut[i]);
    }
    *out = dup_string(holobrace::census_to_json(c->census, gens));
  });
}

hb_status hb_spectrum_json(const char* n_spec, const hb_options* opts, char** out) {
  HB_REQUIRE(n_spec);
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    const auto group = holobrace::GroupSpec::parse(n_spec);
    *out = dup_string(holobrace::spectrum_to_json(group, holobrace::order_spectrum(group, engine_of(opts))));
  });
}

hb_status hb_table(int which, int n_max, uint64_t s, hb_format format, const hb_options* opts, char** out) {
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    if (which != 1 && which != 3 && which != 4) {
      throw holobrace::InvalidInput("table must be 1, 3 or 4, got " + std::to_string(which));
    }
    if (which != 1 && (n_max < 2 || s % 2 == 0)) {
      throw holobrace::InvalidInput("tables 3 and 4 need n_max >= 2 and odd s");
    }
    const auto report = holobrace::table_report({which, n_max, s}, engine_of(opts), progress_of(opts));
    switch (format) {
      case HB_FORMAT_TEXT: *out = dup_string(holobrace::format_text(report)); break;
      case HB_FORMAT_CSV: *out = dup_string(holobrace::format_csv(report)); break;
      case HB_FORMAT_JSON: *out = dup_string(holobrace::format_json(report)); break;
      default: throw holobrace::InvalidInput("unknown format");
    }
  });
}

hb_status hb_verify_conjecture(uint64_t m, const hb_options* opts, int* ok, char** out) {
  HB_REQUIRE(ok);
  *ok = 0;
  if (out) *out = nullptr;
  return guard([&] {
    const auto check = holobrace::verify_conjecture(m, engine_of(opts), progress_of(opts));
    *ok = check.ok() ? 1 : 0;
    if (!out) return;
    nlohmann::ordered_json j;
    j["schema"] = "v1";
    j["m"] = check.m;
    j["order"] = 4 * check.m;
    j["q_expected"] = check.q_expected;
    j["q_computed"] = check.q_computed;
    j["d_expected"] = check.d_expected;
    j["d_computed"] = check.d_computed;
    j["complete"] = check.complete;
    j["ok"] = check.ok();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : check.rows) {
      nlohmann::ordered_json r;
      r["N"] = row.group.display_name();
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
    *out = dup_string(j.dump());
  });
}

hb_status hb_q_closed(uint64_t m, uint64_t* out) {
  HB_REQUIRE(out);
  return guard([&] { *out = holobrace::q_closed(m); });
}

hb_status hb_d_closed(uint64_t m, uint64_t* out) {
  HB_REQUIRE(out);
  return guard([&] { *out = holobrace::d_closed(m); });
}

hb_status hb_hgs_count(const char* g_spec, const char* n_spec, uint64_t r, uint64_t* out) {
  HB_REQUIRE(g_spec);
  HB_REQUIRE(n_spec);
  HB_REQUIRE(out);
  return guard([&] {
    *out = holobrace::hgs_count(holobrace::TargetKind::parse(g_spec), holobrace::GroupSpec::parse(n_spec), r);
  });
}

hb_status hb_brace_from_census(const hb_census* c, size_t index, hb_brace** out) {
  HB_REQUIRE(c);
  HB_REQUIRE(out);
  *out = nullptr;
  if (index >= c->census.classes.size()) return fail(HB_INVALID_INPUT, "class index out of range");
  return guard([&] {
    *out = new hb_brace{holobrace::brace_from_subgroup(c->census.classes[index].representative)};
  });
}

hb_status hb_brace_from_json(const char* json, hb_brace** out) {
  HB_REQUIRE(json);
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new hb_brace{holobrace::brace_from_json(json)}; });
}

void hb_brace_free(hb_brace* b) { delete b; }

uint32_t hb_brace_order(const hb_brace* b) { return b ? b->table.n : 0; }

hb_status hb_brace_op(const hb_brace* b, uint32_t x, uint32_t y, uint32_t* out) {
  HB_REQUIRE(b);
  HB_REQUIRE(out);
  if (x >= b->table.n || y >= b->table.n) return fail(HB_INVALID_INPUT, "element out of range");
  *out = b->table.op(x, y);
  return HB_OK;
}

hb_status hb_brace_to_json(const hb_brace* b, char** out) {
  HB_REQUIRE(b);
  HB_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = dup_string(holobrace::brace_to_json(b->table)); });
}

hb_status hb_brace_verify(const hb_brace* b, int* ok, char** failure) {
  HB_REQUIRE(b);
  HB_REQUIRE(ok);
  *ok = 0;
  if (failure) *failure = nullptr;
  return guard([&] {
    auto check = holobrace::verify_brace(b->table);
    if (check.ok) check = holobrace::verify_lambda(b->table);
    *ok = check.ok ? 1 : 0;
    if (!check.ok && failure) {
      std::string msg = check.failure;
      if (!check.witness.empty()) {
        msg += " at (";
        for (std::size_t i = 0; i < check.witness.size(); ++i) {
          if (i) msg += ", ";
          msg += std::to_string(check.witness[i]);
        }
        msg += ")";
      }
      *failure = dup_string(msg);
    }
  });
}

hb_status hb_brace_ybe_check(const hb_brace* b, int* left_nondegenerate, int* right_nondegenerate) {
  HB_REQUIRE(b);
  return guard([&] {
    const auto r = holobrace::ybe_solution(b->table);
    if (left_nondegenerate) *left_nondegenerate = r.left_nondegenerate ? 1 : 0;
    if (right_nondegenerate) *right_nondegenerate = r.right_nondegenerate ? 1 : 0;
  });
}

}  // extern "C"
