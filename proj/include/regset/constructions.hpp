#pragma once

// Builders for the point-set families: trace-norm curves, Hermitian unitals,
// unions of touching conics, oval-derived sets, subspace lifts and affine
// complements. Every builder returns its set in the standard frame, with
// (∞) = (0:1:0) as distinguished point and l_∞ as its tangent.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "regset/classify.hpp"
#include "regset/plane.hpp"

namespace regset {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f(x) = sum_j coeffs[j] x^(p^j), j < n. Additive by shape.
struct AdditiveMap {
  std::vector<Element> coeffs;
};

/// f(x) = sum_k poly[k] x^k with degree < Q; covers non-additive choices
/// such as f(x) = a x^2.
struct GeneralMap {
  std::vector<Element> poly;
};

using CurveMap = std::variant<AdditiveMap, GeneralMap>;

Element evaluate(const Field& F, const AdditiveMap& f, Element x);
Element evaluate(const Field& F, const GeneralMap& f, Element x);
Element evaluate(const Field& F, const CurveMap& f, Element x);

/// {(x, y) : Tr(y + f(x)) = N(x)} ∪ {(∞)} in PG(2, q^2), with Tr and N the
/// relative trace and norm to GF(q). Throws for odd extension degree.
PointSet trace_norm_set(const PlanePtr& plane, const CurveMap& f);

/// Trace-norm set with f(x) = a x^sqrt(q); needs q to be a square, a != 0.
PointSet gamma_a(const PlanePtr& plane, Element a);

/// y^q + y = x^(q+1) together with (∞).
PointSet hermitian_unital(const PlanePtr& plane);

struct CurveParams {
  Element a, m, d;
};

/// Number of affine points shared by the Hermitian curve y^q + y = x^(q+1)
/// and y = a x^sqrt(q) + m x + d over GF(q^2).
std::uint32_t hermitian_intersection_count(const Field& F, CurveParams c);

/// Counts affine intersections of y^q + y = x^(q+1) with curves
/// y = a x^(p^k) + m x + d over GF(q^2).
class HermitianCounter {
 public:
  HermitianCounter(FieldPtr field, unsigned frobenius_power);

  const Field& field() const { return *field_; }
  /// Direct count over all x.
  std::uint32_t count(Element a, Element m, Element d) const;
  /// Counts for every d at once, indexed by d.index. Uses additivity of the
  /// trace: the count for d is the number of x with
  /// N(x) - Tr(a x^(p^k) + m x) = Tr(d).
  std::vector<std::uint32_t> counts_over_d(Element a, Element m) const;

 private:
  FieldPtr field_;
  unsigned half_;
  unsigned frob_;
  std::vector<Element> norm_;  // N(x)
  std::vector<Element> power_;  // x^(p^k)
  std::vector<Element> trace_;  // Tr(x)
};

/// Union of the conics yz = x^2 + b z^2, b ∈ B, in PG(2, q), q odd.
PointSet touching_union(const PlanePtr& plane, std::span<const Element> B);

/// Sets derived from the conic yz = x^2 in PG(2, q), q odd:
///   1: interior points plus one conic point P0
///   2: exterior points off l0, plus P0
///   3: interior points plus the whole conic
///   4: exterior points off l0, plus the whole conic
/// P0 is the conic point of smallest index and l0 its tangent. Exterior
/// points on l0 are left out so that l0 stays a tangent of the set. The
/// result is moved to the standard frame by rebase().
PointSet oval_set(const PlanePtr& plane, int variant);

/// Interior (0 tangents) and exterior (2 tangents) points of a conic given as
/// a point set; sets are returned in that order.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> conic_interior_exterior(const PointSet& conic);

/// Applies a collineation sending frame.point to (∞) and frame.line to l_∞.
/// The matrix rows are: the smallest-index other line through P0, the
/// smallest-index line missing P0, and l0.
PointSet rebase(const PointSet& X, Frame frame);

/// Deterministic basis of an s-dimensional GF(q)-subspace I of GF(q^h) with
/// I ∩ GF(q) = {0}: greedily take the smallest-index elements outside
/// GF(q) ⊕ span(current basis).
std::vector<Element> default_lift_basis(const TowerMap& tower, unsigned s);

/// GF(q)-span of the basis inside GF(q^h), in enumeration order
/// sum_k lambda_k basis_k with lambda digits running fastest on k = 0.
std::vector<Element> subspace_elements(const TowerMap& tower, std::span<const Element> basis);

/// {(x, y + i) : i ∈ span(basis), (x, y) ∈ S affine} ∪ {(∞)} in PG(2, q^h).
/// S must lie over tower.subfield() and may contain (∞) but no other point
/// at infinity; (∞) is dropped and re-added. Throws ConstructionError for a
/// dependent basis, a span meeting GF(q)*, or s > h - 1.
PointSet lift(const PointSet& S, const TowerMap& tower, std::span<const Element> basis);

/// (AG(2,Q) \ X) ∪ {(∞)}. Needs X ∩ l_∞ = {(∞)}.
PointSet complement(const PointSet& X);

}  // namespace regset
