#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holobrace/enumerate.hpp"

namespace holobrace {

// The brace (N, +, o) of a regular subgroup. Elements are N's indices.
struct BraceTable {
  GroupSpec group;
  std::uint32_t n = 0;
  // a o b at [a * n + b].
  std::vector<std::uint32_t> circ;
  // Automorphism part of g_a, the element of S with translation a.
  std::vector<Automorphism> lambda;

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return circ[std::size_t{a} * n + b]; }
};

struct BraceCheck {
  bool ok = true;
  std::string failure;
  // Offending elements, when the failure names them.
  std::vector<std::uint32_t> witness;
};

// Throws InvalidInput if s is not regular, CapacityError if |N| > 4096.
BraceTable brace_from_subgroup(const RegularSubgroup& s);

// Exhaustive: (N, o) is a group with identity 0, + is abelian, and
// a o (b + c) = a o b - a + a o c.
BraceCheck verify_brace(const BraceTable& bt);

// lambda_{a o b} = lambda_a lambda_b, with lambda_a(b) = -a + a o b, and each
// lambda_a equal to the automorphism recorded in the table.
BraceCheck verify_lambda(const BraceTable& bt);

// The subgroup {(lambda_a, a)} of Hol(N), sorted.
std::vector<std::uint64_t> subgroup_of(const BraceTable& bt);

// r(a, b) = (lambda_a(b), lambda_{lambda_a(b)}^-1(a)).
struct YbeSolution {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> first;
  std::vector<std::uint32_t> second;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;

  std::pair<std::uint32_t, std::uint32_t> operator()(std::uint32_t a, std::uint32_t b) const {
    const std::size_t i = std::size_t{a} * n + b;
    return {first[i], second[i]};
  }
};

// Builds r and checks involutivity and the braid relation exhaustively;
// InternalError if either fails.
YbeSolution ybe_solution(const BraceTable& bt);

// Involutivity and braid relation for an arbitrary map.
BraceCheck verify_ybe(const YbeSolution& r);

// {"schema": "v1", "factors": [...], "order": n, "circ": [[...], ...]}.
std::string brace_to_json(const BraceTable& bt);
// Inverse of brace_to_json; lambda is recovered from the table. Throws
// InvalidInput on malformed documents or tables whose lambda_a are not
// automorphisms.
BraceTable brace_from_json(const std::string& text);

}  // namespace holobrace
