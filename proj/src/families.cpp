#include "regset/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "regset/classify.hpp"
#include "regset/constructions.hpp"

namespace regset {

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"gamma", "hermitian", "trace-norm", "quadratic", "touching", "oval1",
                                              "oval2", "oval3",     "oval4",      "lift",      "complement"};
  return names;
}

FieldPtr field_of_order(std::uint64_t Q) {
  if (Q < 2) throw FieldError("field order must be at least 2");
  std::uint64_t p = 2;
  while (Q % p != 0) ++p;
  unsigned n = 0;
  std::uint64_t r = Q;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) throw FieldError(std::to_string(Q) + " is not a prime power");
  return create_field(static_cast<unsigned>(p), n);
}

PlanePtr plane_of_order(std::uint64_t Q) {
  static std::mutex mu;
  static std::map<std::uint64_t, PlanePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(Q);
  if (it != cache.end()) return it->second;
  PlanePtr P = Plane::create(field_of_order(Q));
  cache.emplace(Q, P);
  return P;
}

std::vector<Element> standard_touching_b(const Field& F, unsigned s) {
  const std::uint32_t q = F.order();
  if (F.characteristic() == 2) throw std::invalid_argument("touching conics need q odd");
  if (s == 0 || (q - 1) % s != 0) throw std::invalid_argument("s must divide q - 1");
  Element v{0};
  for (std::uint32_t i = 1; i < q; ++i) {
    if (!F.is_square(F.neg(Element{i}))) {
      v = Element{i};
      break;
    }
  }
  std::vector<Element> B;
  for (std::uint32_t u = 0; u < q; ++u) B.push_back(F.mul(v, F.pow(Element{u}, s)));
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  return B;
}

Element quadratic_boundary_a(const Field& F) {
  if (F.characteristic() == 2 || F.degree() % 2 != 0) throw std::invalid_argument("need GF(q^2) with q odd");
  const unsigned half = F.degree() / 2;
  const Element four = F.add(F.add(F.one(), F.one()), F.add(F.one(), F.one()));
  for (std::uint32_t i = 1; i < F.order(); ++i)
    if (F.mul(four, F.rel_norm(Element{i}, half)) == F.one()) return Element{i};
  throw std::invalid_argument("no element with 4 N(a) = 1");
}

namespace {

std::uint64_t square_order(std::uint64_t q) { return q * q; }

Element element_or_throw(const Field& F, std::uint32_t idx) {
  if (idx >= F.order()) throw std::invalid_argument("element index " + std::to_string(idx) + " out of range");
  return Element{idx};
}

PointSet build_lift(const FamilySpec& spec) {
  FamilySpec b = spec;
  b.family = spec.base;
  if (b.family == "lift") throw std::invalid_argument("lift base cannot itself be a lift");
  const PointSet base = build_family(b);
  const Field& small = base.field();
  const TowerMap tower(create_field(small.characteristic(), small.degree() * spec.h), small.degree());
  const auto basis = default_lift_basis(tower, spec.s);
  return lift(base, tower, basis);
}

}  // namespace

PointSet build_family(const FamilySpec& spec) {
  const std::string& fam = spec.family;
  if (spec.q < 2) throw std::invalid_argument("q must be given");
  if (fam == "gamma" || fam == "hermitian" || fam == "trace-norm" || fam == "quadratic") {
    const PlanePtr P = plane_of_order(square_order(spec.q));
    const Field& F = P->field();
    if (fam == "gamma") return gamma_a(P, element_or_throw(F, spec.a));
    if (fam == "hermitian") return hermitian_unital(P);
    if (fam == "trace-norm") {
      AdditiveMap f;
      for (std::uint32_t c : spec.f) f.coeffs.push_back(element_or_throw(F, c));
      if (f.coeffs.size() > F.degree()) throw std::invalid_argument("too many coefficients for an additive map");
      return trace_norm_set(P, f);
    }
    GeneralMap f{{Element{0}, Element{0}, element_or_throw(F, spec.a)}};
    PointSet X = trace_norm_set(P, f);
    X.set_label("quadratic Q=" + std::to_string(F.order()) + " a=" + std::to_string(spec.a));
    return X;
  }
  if (fam == "touching") {
    const PlanePtr P = plane_of_order(spec.q);
    const Field& F = P->field();
    std::vector<Element> B;
    if (spec.B.empty()) {
      B = standard_touching_b(F, spec.s);
    } else {
      for (std::uint32_t b : spec.B) B.push_back(element_or_throw(F, b));
    }
    return touching_union(P, B);
  }
  if (fam.size() == 5 && fam.rfind("oval", 0) == 0 && fam[4] >= '1' && fam[4] <= '4')
    return oval_set(plane_of_order(spec.q), fam[4] - '0');
  if (fam == "lift") return build_lift(spec);
  if (fam == "complement") {
    FamilySpec b = spec;
    b.family = spec.base;
    return complement(build_family(b));
  }
  throw std::invalid_argument("unknown family '" + fam + "'");
}

std::optional<FamilyTag> family_tag(const FamilySpec& spec) {
  const std::string& fam = spec.family;
  if (fam == "gamma" || fam == "hermitian" || fam == "trace-norm")
    return FamilyTag{FamilyTag::Kind::TraceNorm, spec.q, 2, 0, 0};
  // Regular pointed in PG(2, q); the congruences are taken mod the plane order.
  if (fam == "touching" || fam.rfind("oval", 0) == 0)
    return FamilyTag{FamilyTag::Kind::RegularPointed, spec.q, 1, 0, 0};
  if (fam == "complement") {
    const bool over_square = spec.base == "gamma" || spec.base == "hermitian" || spec.base == "trace-norm" ||
                             spec.base == "quadratic";
    return FamilyTag{FamilyTag::Kind::RegularPointed, over_square ? square_order(spec.q) : spec.q, 1, 0, 0};
  }
  if (fam == "lift") {
    FamilySpec b = spec;
    b.family = spec.base;
    const PointSet base = build_family(b);
    const TypeReport r = classify(base, standard_frame(base.plane()));
    if (!r.t) throw std::invalid_argument("lift base is not of pointed type");
    return FamilyTag{FamilyTag::Kind::Lift, spec.q, spec.h, spec.s, *r.t};
  }
  return std::nullopt;
}

}  // namespace regset
