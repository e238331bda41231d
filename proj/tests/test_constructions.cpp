#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "regset/constructions.hpp"
#include "regset/families.hpp"

using namespace regset;

namespace {

std::uint32_t u32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }

TEST(Ovals, InteriorExteriorByTangentCount) {
  for (std::uint64_t q : {5u, 7u, 9u}) {
    const auto plane = plane_of_order(q);
    const Field& F = plane->field();
    PointSet C(plane);
    for (std::uint32_t x = 0; x < q; ++x) C.insert(plane->affine_index(Element{x}, F.mul(Element{x}, Element{x})));
    C.insert(plane->infinity_index());
    const auto [interior, exterior] = conic_interior_exterior(C);
    EXPECT_EQ(interior.size(), q * (q - 1) / 2);
    EXPECT_EQ(exterior.size(), q * (q + 1) / 2);
    std::set<std::uint32_t> in(interior.begin(), interior.end()), ex(exterior.begin(), exterior.end());
    for (std::uint32_t P = 0; P < plane->size(); ++P) {
      if (C.contains(P)) continue;
      unsigned tangents = 0;
      for (auto l : plane->pencil_indices(P)) {
        unsigned k = 0;
        for (auto R : plane->point_indices_on_line(l)) k += C.contains(R);
        tangents += k == 1;
      }
      EXPECT_EQ(in.count(P), tangents == 0u);
      EXPECT_EQ(ex.count(P), tangents == 2u);
    }
  }
}

TEST(Ovals, SizesAndPointedParameters) {
  for (std::uint64_t q : {5u, 7u}) {
    const std::uint64_t half = q * (q - 1) / 2;
    const std::uint64_t sizes[] = {half + 1, half + 1, half + q + 1, half + q + 1};
    for (int v = 1; v <= 4; ++v) {
      const PointSet X = oval_set(plane_of_order(q), v);
      EXPECT_EQ(X.size(), sizes[v - 1]) << "q=" << q << " v=" << v;
      const auto o = oracle::pointed(oracle::count_lines(X));
      EXPECT_TRUE(o.frame_ok);
      EXPECT_TRUE(o.regular);
      ASSERT_TRUE(o.t.has_value());
      EXPECT_EQ(*o.t, v <= 2 ? (q - 1) / 2 : (q + 1) / 2);
    }
  }
  EXPECT_THROW(oval_set(plane_of_order(4), 1), ConstructionError);
  EXPECT_THROW(oval_set(plane_of_order(5), 5), ConstructionError);
}

TEST(Rebase, MovesTheFrameToInfinity) {
  const auto plane = plane_of_order(7);
  const Field& F = plane->field();
  // Conic x^2 = y z, moved away from the standard frame by using P0 = (0, 0).
  PointSet C(plane);
  for (std::uint32_t x = 0; x < 7; ++x) C.insert(plane->affine_index(Element{x}, F.mul(Element{x}, Element{x})));
  C.insert(plane->infinity_index());
  const Frame f{plane->affine_index(Element{0}, Element{0}), plane->slope_line_index(Element{0}, Element{0})};
  const PointSet R = rebase(C, f);
  EXPECT_EQ(R.size(), C.size());
  EXPECT_TRUE(R.contains(plane->infinity_index()));
  const auto o = oracle::pointed(oracle::count_lines(R));
  EXPECT_TRUE(o.frame_ok);
  EXPECT_EQ(oracle::spectrum(oracle::count_lines(R)), oracle::spectrum(oracle::count_lines(C)));
}

TEST(Touching, MatchesDirectConstruction) {
  for (std::uint64_t q : {9u, 13u}) {
    const auto plane = plane_of_order(q);
    const Field& F = plane->field();
    std::uint32_t v = 1;
    while (F.is_square(F.neg(Element{v}))) ++v;
    std::set<std::uint32_t> B;
    for (std::uint32_t u = 0; u < q; ++u) B.insert(F.mul(Element{v}, F.mul(Element{u}, Element{u})).index);
    const auto lib = standard_touching_b(F, 2);
    std::set<std::uint32_t> libB;
    for (auto e : lib) libB.insert(e.index);
    EXPECT_EQ(libB, B);
    EXPECT_EQ(B.size(), (q - 1) / 2 + 1);

    PointSet want(plane);
    for (auto b : B)
      for (std::uint32_t x = 0; x < q; ++x)
        want.insert(plane->affine_index(Element{x}, F.add(F.mul(Element{x}, Element{x}), Element{b})));
    want.insert(plane->infinity_index());
    EXPECT_EQ(touching_union(plane, lib), want);
  }
  EXPECT_THROW(touching_union(plane_of_order(5), {}), ConstructionError);
}

TEST(Lift, TrivialLiftIsTheSubspace) {
  const TowerMap tower(create_field(3, 2), 1);
  const auto small = plane_of_order(3);
  PointSet S(small);
  S.insert(small->affine_index(Element{0}, Element{0}));
  S.insert(small->infinity_index());
  const auto basis = default_lift_basis(tower, 1);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_FALSE(tower.field()->in_subfield(basis[0], 1));
  const PointSet L = lift(S, tower, basis);
  const Plane& P = L.plane();
  EXPECT_EQ(P.order(), 9u);
  const auto span = subspace_elements(tower, basis);
  ASSERT_EQ(span.size(), 3u);
  PointSet want(L.plane_ptr());
  for (auto i : span) want.insert(P.affine_index(Element{0}, i));
  want.insert(P.infinity_index());
  EXPECT_EQ(L, want);
}

TEST(Lift, PointsAreTranslatesBySpan) {
  const TowerMap tower(create_field(5, 2), 1);
  const PointSet S = oval_set(plane_of_order(5), 1);
  const auto basis = default_lift_basis(tower, 1);
  const PointSet L = lift(S, tower, basis);
  const Plane& P = L.plane();
  const Field& big = P.field();
  const auto span = subspace_elements(tower, basis);
  PointSet want(L.plane_ptr());
  for (auto idx : S.members()) {
    if (!S.plane().is_affine(idx)) continue;
    const Element x = tower.embed(S.plane().affine_x(idx));
    const Element y = tower.embed(S.plane().affine_y(idx));
    for (auto i : span) want.insert(P.affine_index(x, big.add(y, i)));
  }
  want.insert(P.infinity_index());
  EXPECT_EQ(L, want);
  EXPECT_EQ(L.size(), 5u * (S.size() - 1) + 1);
}

TEST(Lift, RejectsBadSubspaces) {
  const TowerMap tower(create_field(3, 3), 1);
  const PointSet S = oval_set(plane_of_order(3), 3);
  const Field& big = *tower.field();
  EXPECT_THROW(lift(S, tower, std::vector<Element>{big.one()}), ConstructionError);
  const auto b = default_lift_basis(tower, 2);
  EXPECT_THROW(lift(S, tower, std::vector<Element>{b[0], b[0]}), ConstructionError);
  EXPECT_THROW(default_lift_basis(tower, 3), ConstructionError);
}

TEST(Complement, InvolutionAndParameters) {
  const auto plane = plane_of_order(9);
  const PointSet H = hermitian_unital(plane);
  const PointSet C = complement(H);
  EXPECT_EQ(C.size(), 81u - 27u + 1u);
  EXPECT_EQ(complement(C), H);
  const auto o = oracle::pointed(oracle::count_lines(C));
  EXPECT_TRUE(o.regular);
  EXPECT_EQ(o.t, 6u);
  EXPECT_EQ(o.types, (std::vector<std::uint32_t>{5, 8}));

  for (int v = 1; v <= 4; ++v) {
    const PointSet X = oval_set(plane_of_order(7), v);
    const auto ox = oracle::pointed(oracle::count_lines(X));
    const auto oc = oracle::pointed(oracle::count_lines(complement(X)));
    ASSERT_TRUE(ox.t && oc.t);
    EXPECT_EQ(*oc.t, 7u - *ox.t);
    std::vector<std::uint32_t> flipped;
    for (auto m : ox.types) flipped.push_back(7u - m);
    std::sort(flipped.begin(), flipped.end());
    EXPECT_EQ(oc.types, flipped);
  }
  PointSet bad(plane);
  bad.insert(0);
  EXPECT_THROW(complement(bad), ConstructionError);
}

TEST(TraceNorm, GammaMatchesOracleAndHermitianIsZeroMap) {
  const auto plane = plane_of_order(16);
  const auto tn = oracle::trace_norm(plane->field());
  for (std::uint32_t a = 1; a < 16; ++a) EXPECT_EQ(gamma_a(plane, Element{a}), oracle::gamma(plane, tn, Element{a}));
  EXPECT_EQ(trace_norm_set(plane, AdditiveMap{}), oracle::hermitian(plane, tn));
  EXPECT_EQ(hermitian_unital(plane).size(), u32(65));
  EXPECT_THROW(gamma_a(plane, Element{0}), ConstructionError);
  EXPECT_THROW(gamma_a(plane_of_order(9), Element{1}), ConstructionError);
}

TEST(TraceNorm, CounterAgreesWithDirectCount) {
  const FieldPtr F = field_of_order(81);
  const auto tn = oracle::trace_norm(*F);
  const HermitianCounter H(F, 1);
  for (std::uint32_t a : {1u, 7u})
    for (std::uint32_t m : {0u, 5u, 40u}) {
      const auto by_d = H.counts_over_d(Element{a}, Element{m});
      for (std::uint32_t d = 0; d < 81; d += 4) {
        std::uint32_t k = 0;
        for (std::uint32_t x = 0; x < 81; ++x) {
          const Element X{x};
          const Element y = F->add(F->add(F->mul(Element{a}, oracle::power(*F, X, 3)), F->mul(Element{m}, X)), Element{d});
          k += tn.tr[y.index] == tn.nm[x];
        }
        EXPECT_EQ(by_d[d], k);
        EXPECT_EQ(H.count(Element{a}, Element{m}, Element{d}), k);
        EXPECT_EQ(hermitian_intersection_count(*F, {Element{a}, Element{m}, Element{d}}), k);
      }
    }
}

TEST(Families, NamesBuildAndReject) {
  for (const auto& name : family_names()) {
    FamilySpec s{name, name == "gamma" ? 4u : 5u};
    if (name == "touching") s.q = 9;
    if (name == "quadratic") s.q = 3;
    if (name == "lift") s.s = 1;
    EXPECT_NO_THROW(build_family(s)) << name;
  }
  EXPECT_THROW(build_family({"nope", 5}), std::invalid_argument);
  EXPECT_THROW(build_family({"gamma", 4, 16}), std::invalid_argument);
  EXPECT_THROW(field_of_order(12), FieldError);
}

}  // namespace
