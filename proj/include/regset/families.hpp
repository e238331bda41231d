#pragma once

// Named point-set families, shared by the command line tool, the verify
// suites and the Python module.
//
//   gamma       Γ_a in PG(2, q^2), a given by element index (q a square)
//   hermitian   Hermitian unital in PG(2, q^2)
//   trace-norm  Tr(y + f(x)) = N(x) in PG(2, q^2), f additive with
//               coefficients `f` on x, x^p, x^(p^2), ...
//   quadratic   Tr(y + a x^2) = N(x) in PG(2, q^2)
//   touching    union of the conics yz = x^2 + b z^2 in PG(2, q), b ∈ B;
//               with B empty the set {v u^s : u ∈ GF(q)} is used
//   oval1..4    oval-derived sets in PG(2, q)
//   lift        lift of `base` (built over GF(q)) into PG(2, q^h), dimension s
//   complement  complement of `base` in PG(2, q)

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regset/codes.hpp"
#include "regset/galois.hpp"
#include "regset/plane.hpp"

namespace regset {

struct FamilySpec {
  std::string family;
  std::uint64_t q = 0;
  std::uint32_t a = 1;
  std::vector<std::uint32_t> B;
  unsigned s = 2;
  unsigned h = 2;
  std::vector<std::uint32_t> f;
  std::string base = "oval1";
};

const std::vector<std::string>& family_names();

/// GF(Q) for a prime power Q; throws FieldError otherwise.
FieldPtr field_of_order(std::uint64_t Q);

/// Cached plane of order Q.
PlanePtr plane_of_order(std::uint64_t Q);

/// Smallest-index v with -v a non-square, then {v u^s : u ∈ GF(q)}, sorted.
/// Needs q odd and s | q - 1.
std::vector<Element> standard_touching_b(const Field& F, unsigned s);

/// Element a with 4 N(a) = 1 of smallest index, q odd; GF(q^2) given.
Element quadratic_boundary_a(const Field& F);

/// Throws std::invalid_argument for unknown families or bad parameters.
PointSet build_family(const FamilySpec& spec);

/// Family tag used for the code congruences, when the family has one.
std::optional<FamilyTag> family_tag(const FamilySpec& spec);

}  // namespace regset
