#include "regset/constructions.hpp"

#include <algorithm>
#include <string>

namespace regset {

namespace {

unsigned half_degree(const Field& F) {
  if (F.degree() % 2 != 0)
    throw ConstructionError("field GF(" + std::to_string(F.order()) + ") is not a quadratic extension");
  return F.degree() / 2;
}

std::string element_list(std::span<const Element> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i].index);
  }
  return s;
}

}  // namespace

Element evaluate(const Field& F, const AdditiveMap& f, Element x) {
  if (f.coeffs.size() > F.degree()) throw ConstructionError("additive map has more than n coefficients");
  Element acc{0};
  for (std::size_t j = 0; j < f.coeffs.size(); ++j)
    if (f.coeffs[j].index != 0) acc = F.add(acc, F.mul(f.coeffs[j], F.frobenius(x, static_cast<std::int64_t>(j))));
  return acc;
}

Element evaluate(const Field& F, const GeneralMap& f, Element x) {
  if (f.poly.size() > F.order()) throw ConstructionError("polynomial degree must be below Q");
  Element acc{0};
  for (std::size_t k = f.poly.size(); k-- > 0;) acc = F.add(F.mul(acc, x), f.poly[k]);
  return acc;
}

Element evaluate(const Field& F, const CurveMap& f, Element x) {
  return std::visit([&](const auto& g) { return evaluate(F, g, x); }, f);
}

PointSet trace_norm_set(const PlanePtr& plane, const CurveMap& f) {
  const Field& F = plane->field();
  const unsigned half = half_degree(F);
  const std::uint32_t Q = F.order();

  // Tr is q-to-1 onto GF(q): group y by its trace.
  std::vector<std::vector<std::uint32_t>> fiber(Q);
  for (std::uint32_t y = 0; y < Q; ++y) fiber[F.rel_trace(Element{y}, half).index].push_back(y);

  PointSet X(plane, "trace_norm");
  for (std::uint32_t xi = 0; xi < Q; ++xi) {
    const Element x{xi};
    const Element target = F.sub(F.rel_norm(x, half), F.rel_trace(evaluate(F, f, x), half));
    for (std::uint32_t y : fiber[target.index]) X.insert(plane->affine_index(x, Element{y}));
  }
  X.insert(plane->infinity_index());
  return X;
}

PointSet gamma_a(const PlanePtr& plane, Element a) {
  const Field& F = plane->field();
  if (F.degree() % 4 != 0)
    throw ConstructionError("gamma_a needs GF(q^2) with q a square (extension degree divisible by 4)");
  if (a.index == 0 || a.index >= F.order()) throw ConstructionError("gamma_a needs a nonzero field element a");
  AdditiveMap f;
  f.coeffs.assign(F.degree() / 4 + 1, Element{0});
  f.coeffs.back() = a;
  PointSet X = trace_norm_set(plane, f);
  X.set_label("gamma_a Q=" + std::to_string(F.order()) + " a=" + std::to_string(a.index));
  return X;
}

PointSet hermitian_unital(const PlanePtr& plane) {
  PointSet X = trace_norm_set(plane, AdditiveMap{});
  X.set_label("hermitian Q=" + std::to_string(plane->order()));
  return X;
}

std::uint32_t hermitian_intersection_count(const Field& F, CurveParams c) {
  if (F.degree() % 4 != 0) throw ConstructionError("q must be a square");
  if (c.a.index == 0) throw ConstructionError("a must be nonzero");
  const unsigned half = F.degree() / 2;
  const unsigned root = F.degree() / 4;
  std::uint32_t count = 0;
  for (std::uint32_t xi = 0; xi < F.order(); ++xi) {
    const Element x{xi};
    const Element y = F.add(F.add(F.mul(c.a, F.frobenius(x, root)), F.mul(c.m, x)), c.d);
    if (F.rel_trace(y, half) == F.rel_norm(x, half)) ++count;
  }
  return count;
}

HermitianCounter::HermitianCounter(FieldPtr field, unsigned frobenius_power)
    : field_(std::move(field)), frob_(frobenius_power) {
  const Field& F = *field_;
  half_ = half_degree(F);
  if (frob_ >= F.degree()) throw ConstructionError("Frobenius power must be below the extension degree");
  const std::uint32_t Q = F.order();
  norm_.resize(Q);
  power_.resize(Q);
  trace_.resize(Q);
  for (std::uint32_t i = 0; i < Q; ++i) {
    const Element x{i};
    norm_[i] = F.rel_norm(x, half_);
    power_[i] = F.frobenius(x, frob_);
    trace_[i] = F.rel_trace(x, half_);
  }
}

std::uint32_t HermitianCounter::count(Element a, Element m, Element d) const {
  const Field& F = *field_;
  std::uint32_t n = 0;
  for (std::uint32_t i = 0; i < F.order(); ++i) {
    const Element x{i};
    const Element y = F.add(F.add(F.mul(a, power_[i]), F.mul(m, x)), d);
    if (trace_[y.index] == norm_[i]) ++n;
  }
  return n;
}

std::vector<std::uint32_t> HermitianCounter::counts_over_d(Element a, Element m) const {
  const Field& F = *field_;
  const std::uint32_t Q = F.order();
  std::vector<std::uint32_t> hist(Q, 0);
  for (std::uint32_t i = 0; i < Q; ++i) {
    const Element x{i};
    const Element s = F.add(F.mul(a, power_[i]), F.mul(m, x));
    ++hist[F.sub(norm_[i], trace_[s.index]).index];
  }
  std::vector<std::uint32_t> out(Q);
  for (std::uint32_t d = 0; d < Q; ++d) out[d] = hist[trace_[d].index];
  return out;
}

PointSet touching_union(const PlanePtr& plane, std::span<const Element> B) {
  const Field& F = plane->field();
  if (F.characteristic() == 2) throw ConstructionError("touching conics need odd q");
  if (B.empty()) throw ConstructionError("B must be nonempty");
  std::vector<Element> b(B.begin(), B.end());
  for (Element e : b)
    if (e.index >= F.order()) throw ConstructionError("B contains an element outside the field");
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());

  PointSet X(plane, "touching Q=" + std::to_string(F.order()) + " B=" + element_list(b));
  for (std::uint32_t xi = 0; xi < F.order(); ++xi) {
    const Element x{xi};
    const Element x2 = F.mul(x, x);
    for (Element e : b) X.insert(plane->affine_index(x, F.add(x2, e)));
  }
  X.insert(plane->infinity_index());
  return X;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> conic_interior_exterior(const PointSet& conic) {
  const Plane& plane = conic.plane();
  const IntersectionEnumerator E = enumerate(conic);
  std::vector<std::uint32_t> tangents(plane.size(), 0);
  for (std::uint32_t li = 0; li < plane.size(); ++li) {
    if (E.line_sizes[li] != 1) continue;
    for (std::uint32_t pi : plane.point_indices_on_line(li))
      if (!conic.contains(pi)) ++tangents[pi];
  }
  std::vector<std::uint32_t> interior, exterior;
  for (std::uint32_t pi = 0; pi < plane.size(); ++pi) {
    if (conic.contains(pi)) continue;
    if (tangents[pi] == 0) interior.push_back(pi);
    if (tangents[pi] == 2) exterior.push_back(pi);
  }
  return {interior, exterior};
}

PointSet oval_set(const PlanePtr& plane, int variant) {
  const Field& F = plane->field();
  if (F.characteristic() == 2) throw ConstructionError("oval sets need odd q");
  if (variant < 1 || variant > 4) throw ConstructionError("oval variant must be 1..4");

  PointSet conic(plane, "conic");
  for (std::uint32_t xi = 0; xi < F.order(); ++xi) conic.insert(plane->affine_index(Element{xi}, F.mul(Element{xi}, Element{xi})));
  conic.insert(plane->infinity_index());

  const auto [interior, exterior] = conic_interior_exterior(conic);
  const std::uint32_t p0 = conic.members().front();
  std::uint32_t l0 = 0;
  {
    const IntersectionEnumerator E = enumerate(conic);
    bool found = false;
    for (std::uint32_t li : plane->pencil_indices(p0)) {
      if (E.line_sizes[li] == 1) {
        l0 = li;
        found = true;
        break;
      }
    }
    if (!found) throw ConstructionError("conic point without tangent");  // impossible for a conic
  }
  const PlaneLine tangent = plane->line(l0);

  PointSet X(plane);
  if (variant == 1 || variant == 3) {
    for (std::uint32_t pi : interior) X.insert(pi);
  } else {
    for (std::uint32_t pi : exterior)
      if (!plane->incident(plane->point(pi).coords, tangent.coeffs)) X.insert(pi);
  }
  if (variant <= 2) {
    X.insert(p0);
  } else {
    for (std::uint32_t pi : conic.members()) X.insert(pi);
  }
  PointSet out = rebase(X, Frame{p0, l0});
  out.set_label("oval Q=" + std::to_string(F.order()) + " variant=" + std::to_string(variant));
  return out;
}

PointSet rebase(const PointSet& X, Frame frame) {
  const Plane& plane = X.plane();
  const Field& F = plane.field();
  const PlanePoint P0 = plane.point(frame.point);
  const PlaneLine l0 = plane.line(frame.line);
  if (!plane.incident(P0, l0)) throw ConstructionError("rebase frame line misses the frame point");

  std::uint32_t r1 = plane.size();
  for (std::uint32_t li : plane.pencil_indices(frame.point)) {
    if (li != frame.line) {
      r1 = li;
      break;
    }
  }
  std::uint32_t r2 = plane.size();
  for (std::uint32_t li = 0; li < plane.size(); ++li) {
    if (!plane.incident(P0.coords, plane.triple(li))) {
      r2 = li;
      break;
    }
  }
  const std::array<Triple, 3> M = {plane.triple(r1), plane.triple(r2), l0.coeffs};

  PointSet out(X.plane_ptr(), X.label());
  for (std::uint32_t pi : X.members()) {
    const Triple v = plane.triple(pi);
    Triple w;
    for (int r = 0; r < 3; ++r)
      w[r] = F.add(F.add(F.mul(M[r][0], v[0]), F.mul(M[r][1], v[1])), F.mul(M[r][2], v[2]));
    out.insert(plane.triple_index(w));
  }
  return out;
}

std::vector<Element> default_lift_basis(const TowerMap& tower, unsigned s) {
  const Field& big = *tower.field();
  const unsigned h = big.degree() / tower.sub_degree();
  if (s < 1 || s > h - 1) throw ConstructionError("subspace dimension must lie in [1, h-1]");
  const std::uint32_t qs = tower.subfield()->order();

  std::vector<std::uint8_t> covered(big.order(), 0);
  std::vector<std::uint32_t> span;
  for (std::uint32_t c = 0; c < qs; ++c) span.push_back(tower.embed(Element{c}).index);
  for (std::uint32_t e : span) covered[e] = 1;

  std::vector<Element> basis;
  for (std::uint32_t e = 1; e < big.order() && basis.size() < s; ++e) {
    if (covered[e]) continue;
    basis.push_back(Element{e});
    std::vector<std::uint32_t> grown;
    grown.reserve(span.size() * qs);
    for (std::uint32_t c = 0; c < qs; ++c) {
      const Element ce = big.mul(tower.embed(Element{c}), Element{e});
      for (std::uint32_t w : span) grown.push_back(big.add(Element{w}, ce).index);
    }
    span = std::move(grown);
    for (std::uint32_t w : span) covered[w] = 1;
  }
  return basis;
}

std::vector<Element> subspace_elements(const TowerMap& tower, std::span<const Element> basis) {
  const Field& big = *tower.field();
  const std::uint32_t qs = tower.subfield()->order();
  std::vector<Element> out{Element{0}};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Element> next;
    next.reserve(out.size() * qs);
    for (std::uint32_t c = 0; c < qs; ++c) {
      const Element ce = big.mul(tower.embed(Element{c}), basis[k]);
      for (Element w : out) next.push_back(big.add(w, ce));
    }
    out = std::move(next);
  }
  return out;
}

PointSet lift(const PointSet& S, const TowerMap& tower, std::span<const Element> basis) {
  const Field& small = S.field();
  const Field& sub = *tower.subfield();
  if (small.characteristic() != sub.characteristic() || small.degree() != sub.degree())
    throw ConstructionError("input set does not live over the tower's subfield");
  const Field& big = *tower.field();
  const unsigned h = big.degree() / tower.sub_degree();
  const std::size_t s = basis.size();
  if (s < 1) throw ConstructionError("lift needs a nonempty subspace basis");
  if (s > h - 1) throw ConstructionError("subspace dimension exceeds h - 1");
  for (Element e : basis)
    if (e.index >= big.order()) throw ConstructionError("basis element outside GF(q^h)");

  const std::vector<Element> span = subspace_elements(tower, basis);
  std::vector<std::uint32_t> sorted;
  for (Element e : span) sorted.push_back(e.index);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConstructionError("subspace basis is linearly dependent over GF(q)");
  for (Element e : span)
    if (e.index != 0 && big.in_subfield(e, tower.sub_degree()))
      throw ConstructionError("subspace meets GF(q) nontrivially");

  const Plane& sp = S.plane();
  PlanePtr plane = Plane::create(tower.field());
  PointSet out(plane, S.label() + " | lift h=" + std::to_string(h) + " s=" + std::to_string(s) +
                          " I=" + element_list(basis) + " ((inf) dropped and re-added)");
  for (std::uint32_t pi : S.members()) {
    if (pi == sp.infinity_index()) continue;
    if (!sp.is_affine(pi)) throw ConstructionError("input set has a point at infinity other than (inf)");
    const Element x = tower.embed(sp.affine_x(pi));
    const Element y = tower.embed(sp.affine_y(pi));
    for (Element i : span) out.insert(plane->affine_index(x, big.add(y, i)));
  }
  out.insert(plane->infinity_index());
  return out;
}

PointSet complement(const PointSet& X) {
  const Plane& plane = X.plane();
  const std::uint32_t Q = plane.order();
  if (!X.contains(plane.infinity_index())) throw ConstructionError("complement needs (inf) in the set");
  for (std::uint32_t d = 0; d < Q; ++d)
    if (X.contains(Q * Q + d)) throw ConstructionError("complement needs l_inf to be tangent at (inf)");
  PointSet out(X.plane_ptr(), "complement of [" + X.label() + "]");
  for (std::uint32_t pi = 0; pi < Q * Q; ++pi)
    if (!X.contains(pi)) out.insert(pi);
  out.insert(plane.infinity_index());
  return out;
}

}  // namespace regset
