#include "holobrace/brace.hpp"

#include <algorithm>

#include "holobrace/error.hpp"
#include "json.hpp"

namespace holobrace {

namespace {

constexpr std::uint64_t kMaxBraceOrder = 4096;

struct AddTable {
  std::uint32_t n;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> neg;

  explicit AddTable(const GroupSpec& g) : n(static_cast<std::uint32_t>(g.order())), add(std::size_t{n} * n), neg(n) {
    std::vector<Element> elems;
    for (std::uint32_t i = 0; i < n; ++i) elems.push_back(g.element_at(i));
    for (std::uint32_t a = 0; a < n; ++a) {
      neg[a] = static_cast<std::uint32_t>(g.index_of(holobrace::neg(g, elems[a])));
      for (std::uint32_t b = 0; b < n; ++b) {
        add[std::size_t{a} * n + b] = static_cast<std::uint32_t>(g.index_of(holobrace::add(g, elems[a], elems[b])));
      }
    }
  }
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return add[std::size_t{a} * n + b]; }
};

// lambda_a(b) = -a + a o b, as a table.
std::vector<std::uint32_t> lambda_table(const BraceTable& bt, const AddTable& add) {
  std::vector<std::uint32_t> out(std::size_t{bt.n} * bt.n);
  for (std::uint32_t a = 0; a < bt.n; ++a) {
    for (std::uint32_t b = 0; b < bt.n; ++b) out[std::size_t{a} * bt.n + b] = add(add.neg[a], bt.op(a, b));
  }
  return out;
}

BraceCheck fail(std::string what, std::vector<std::uint32_t> witness) {
  return {false, std::move(what), std::move(witness)};
}

void check_order(const GroupSpec& g) {
  if (g.order() > kMaxBraceOrder) {
    throw CapacityError("brace tables are limited to order " + std::to_string(kMaxBraceOrder) + ", got " +
                        std::to_string(g.order()));
  }
}

}  // namespace

BraceTable brace_from_subgroup(const RegularSubgroup& s) {
  const GroupSpec& g = s.group;
  check_order(g);
  const auto elems = s.decoded();
  if (!is_regular(g, elems)) throw InvalidInput("subgroup is not regular");
  BraceTable bt;
  bt.group = g;
  bt.n = static_cast<std::uint32_t>(g.order());
  bt.circ.resize(std::size_t{bt.n} * bt.n);
  bt.lambda.resize(bt.n);
  for (const auto& e : elems) {
    const auto a = static_cast<std::uint32_t>(g.index_of(e.trans));
    bt.lambda[a] = e.aut;
    for (std::uint32_t b = 0; b < bt.n; ++b) {
      bt.circ[std::size_t{a} * bt.n + b] = static_cast<std::uint32_t>(g.index_of(hol_apply(g, e, g.element_at(b))));
    }
  }
  return bt;
}

BraceCheck verify_brace(const BraceTable& bt) {
  const std::uint32_t n = bt.n;
  if (n != bt.group.order() || bt.circ.size() != std::size_t{n} * n) return fail("table has the wrong size", {});
  for (const auto v : bt.circ) {
    if (v >= n) return fail("table entry out of range", {v});
  }
  const AddTable add(bt.group);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return fail("+ is not commutative", {a, b});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (bt.op(0, a) != a || bt.op(a, 0) != a) return fail("0 is not the identity of o", {a});
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (seen[bt.op(a, b)]++) return fail("o has no inverses", {a});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab = bt.op(a, b);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (bt.op(ab, c) != bt.op(a, bt.op(b, c))) return fail("o is not associative", {a, b, c});
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab_minus_a = add(bt.op(a, b), add.neg[a]);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (bt.op(a, add(b, c)) != add(ab_minus_a, bt.op(a, c))) {
          return fail("brace relation fails", {a, b, c});
        }
      }
    }
  }
  return {};
}

BraceCheck verify_lambda(const BraceTable& bt) {
  const std::uint32_t n = bt.n;
  const AddTable add(bt.group);
  const auto lam = lambda_table(bt, add);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto image = aut_apply(bt.group, bt.lambda[a], bt.group.element_at(b));
      if (bt.group.index_of(image) != lam[std::size_t{a} * n + b]) return fail("lambda_a differs from the table", {a, b});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::size_t ab = bt.op(a, b);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (lam[ab * n + c] != lam[std::size_t{a} * n + lam[std::size_t{b} * n + c]]) {
          return fail("lambda is not a homomorphism", {a, b, c});
        }
      }
    }
  }
  return {};
}

std::vector<std::uint64_t> subgroup_of(const BraceTable& bt) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t a = 0; a < bt.n; ++a) {
    out.push_back(hol_encode(bt.group, HolElement{bt.lambda[a], bt.group.element_at(a)}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

YbeSolution ybe_solution(const BraceTable& bt) {
  const std::uint32_t n = bt.n;
  const AddTable add(bt.group);
  const auto lam = lambda_table(bt, add);
  std::vector<std::uint32_t> lam_inv(lam.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) lam_inv[std::size_t{a} * n + lam[std::size_t{a} * n + b]] = b;
  }
  YbeSolution r;
  r.n = n;
  r.first.resize(std::size_t{n} * n);
  r.second.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t u = lam[std::size_t{a} * n + b];
      r.first[std::size_t{a} * n + b] = u;
      r.second[std::size_t{a} * n + b] = lam_inv[std::size_t{u} * n + a];
    }
  }
  const BraceCheck check = verify_ybe(r);
  if (!check.ok) throw InternalError("YBE solution of a brace: " + check.failure);

  r.left_nondegenerate = r.right_nondegenerate = true;
  for (std::uint32_t a = 0; a < n && r.left_nondegenerate; ++a) {
    std::vector<char> seen(n, 0);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (seen[r.first[std::size_t{a} * n + b]]++) r.left_nondegenerate = false;
    }
  }
  for (std::uint32_t b = 0; b < n && r.right_nondegenerate; ++b) {
    std::vector<char> seen(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      if (seen[r.second[std::size_t{a} * n + b]]++) r.right_nondegenerate = false;
    }
  }
  return r;
}

BraceCheck verify_ybe(const YbeSolution& r) {
  const std::uint32_t n = r.n;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto [u, v] = r(a, b);
      if (r(u, v) != std::pair{a, b}) return fail("r is not involutive", {a, b});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        // r12 r23 r12 against r23 r12 r23.
        auto [x1, x2] = r(a, b);
        std::uint32_t x3 = c;
        std::tie(x2, x3) = r(x2, x3);
        std::tie(x1, x2) = r(x1, x2);
        std::uint32_t y1 = a;
        auto [y2, y3] = r(b, c);
        std::tie(y1, y2) = r(y1, y2);
        std::tie(y2, y3) = r(y2, y3);
        if (x1 != y1 || x2 != y2 || x3 != y3) return fail("braid relation fails", {a, b, c});
      }
    }
  }
  return {};
}

std::string brace_to_json(const BraceTable& bt) {
  nlohmann::json j;
  j["schema"] = "v1";
  j["factors"] = bt.group.factors();
  j["order"] = bt.n;
  auto rows = nlohmann::json::array();
  for (std::uint32_t a = 0; a < bt.n; ++a) {
    rows.push_back(std::vector<std::uint32_t>(bt.circ.begin() + std::size_t{a} * bt.n,
                                              bt.circ.begin() + std::size_t{a + 1} * bt.n));
  }
  j["circ"] = std::move(rows);
  return j.dump();
}

BraceTable brace_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("brace JSON: ") + e.what());
  }
  BraceTable bt;
  try {
    if (j.at("schema").get<std::string>() != "v1") throw InvalidInput("brace JSON: unsupported schema");
    const auto factors = j.at("factors").get<std::vector<std::uint64_t>>();
    bt.group = GroupSpec::from_orders(factors);
    if (bt.group.factors() != j.at("factors").get<std::vector<std::uint32_t>>()) {
      throw InvalidInput("brace JSON: factors are not in canonical order");
    }
    check_order(bt.group);
    bt.n = static_cast<std::uint32_t>(bt.group.order());
    const auto rows = j.at("circ").get<std::vector<std::vector<std::uint32_t>>>();
    if (rows.size() != bt.n) throw InvalidInput("brace JSON: circ has the wrong number of rows");
    for (const auto& row : rows) {
      if (row.size() != bt.n) throw InvalidInput("brace JSON: circ row has the wrong length");
      for (const auto v : row) {
        if (v >= bt.n) throw InvalidInput("brace JSON: circ entry out of range");
      }
      bt.circ.insert(bt.circ.end(), row.begin(), row.end());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("brace JSON: ") + e.what());
  }

  // Recover each lambda_a from the images of the unit vectors.
  const GroupSpec& g = bt.group;
  const AddTable add(g);
  const auto lam = lambda_table(bt, add);
  bt.lambda.resize(bt.n);
  for (std::uint32_t a = 0; a < bt.n; ++a) {
    Automorphism aut;
    for (const auto& block : g.blocks()) {
      std::vector<std::vector<std::uint64_t>> rows(block.rank(), std::vector<std::uint64_t>(block.rank()));
      for (std::size_t col = 0; col < block.rank(); ++col) {
        Element unit = g.identity();
        unit[block.offset + col] = 1;
        const Element image = g.element_at(lam[std::size_t{a} * bt.n + g.index_of(unit)]);
        for (std::size_t row = 0; row < block.rank(); ++row) rows[row][col] = image[block.offset + row];
      }
      aut.blocks.push_back(EndoMatrix::from_rows(block.p, block.exponents, rows));
    }
    for (std::uint32_t b = 0; b < bt.n; ++b) {
      if (g.index_of(aut_apply(g, aut, g.element_at(b))) != lam[std::size_t{a} * bt.n + b]) {
        throw InvalidInput("brace JSON: lambda_" + std::to_string(a) + " is not an endomorphism of N");
      }
    }
    if (!aut_is_valid(g, aut)) throw InvalidInput("brace JSON: lambda_" + std::to_string(a) + " is not invertible");
    bt.lambda[a] = std::move(aut);
  }
  return bt;
}

}  // namespace holobrace
