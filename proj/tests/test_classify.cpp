#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "regset/classify.hpp"
#include "regset/constructions.hpp"
#include "regset/families.hpp"

using namespace regset;

namespace {

PointSet random_set(const PlanePtr& plane, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  PointSet X(plane);
  for (std::uint32_t i = 0; i < plane->size(); ++i)
    if (static_cast<double>(rng() % 1000) < density * 1000) X.insert(i);
  return X;
}

// Compares the enumerator with counts taken line by line from the plane.
void expect_matches_brute_force(const PointSet& X, unsigned workers) {
  const IntersectionEnumerator E = enumerate(X, workers);
  const Plane& P = X.plane();
  std::map<std::uint32_t, std::uint64_t> global;
  for (std::uint32_t l = 0; l < P.size(); ++l) {
    std::uint32_t k = 0;
    for (auto pt : P.point_indices_on_line(l)) k += X.contains(pt);
    ASSERT_EQ(E.line_sizes[l], k) << "line " << l;
    ++global[k];
  }
  EXPECT_EQ(E.global, global);
  EXPECT_EQ(E.set_size, X.size());
  EXPECT_TRUE(check_double_counting(E).ok());

  const auto c = oracle::count_lines(X);
  EXPECT_EQ(E.global, oracle::spectrum(c));
  ASSERT_EQ(E.by_direction.size(), P.order() + 1u);
  for (std::uint32_t m = 0; m < P.order(); ++m) {
    auto s = c.slope[m];
    std::sort(s.begin(), s.end());
    EXPECT_EQ(E.by_direction[m], s);
  }
  auto v = c.vertical;
  std::sort(v.begin(), v.end());
  EXPECT_EQ(E.by_direction.back(), v);
  EXPECT_EQ(E.infinity_size, c.at_infinity);
}

TEST(Enumerate, MatchesBruteForceOnRandomSets) {
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {5, 1}, {3, 2}, {2, 4}})
    for (std::uint64_t seed : {1u, 2u})
      for (unsigned workers : {1u, 3u}) expect_matches_brute_force(random_set(Plane::create(create_field(p, n)), seed, 0.4), workers);
}

TEST(Enumerate, EmptyAndFullPlane) {
  const auto plane = Plane::create(create_field(7, 1));
  PointSet empty(plane), full(plane);
  for (std::uint32_t i = 0; i < plane->size(); ++i) full.insert(i);
  const auto E0 = enumerate(empty);
  EXPECT_EQ(E0.global, (std::map<std::uint32_t, std::uint64_t>{{0, 57}}));
  const auto E1 = enumerate(full);
  EXPECT_EQ(E1.global, (std::map<std::uint32_t, std::uint64_t>{{8, 57}}));
  EXPECT_TRUE(check_double_counting(E1).ok());
  EXPECT_TRUE(auto_classify(full, E1).empty());
  EXPECT_THROW(classify(full, E1, standard_frame(*plane)), ClassifyError);
}

TEST(Classify, HermitianUnitalOverGF9) {
  const auto plane = plane_of_order(9);
  const auto tn = oracle::trace_norm(plane->field());
  const PointSet H = hermitian_unital(plane);
  EXPECT_EQ(H, oracle::hermitian(plane, tn));
  const auto E = enumerate(H);
  EXPECT_TRUE(is_unital(H, E));
  EXPECT_EQ(E.global, (std::map<std::uint32_t, std::uint64_t>{{1, 28}, {4, 63}}));
  const TypeReport r = classify(H, E, standard_frame(*plane));
  EXPECT_TRUE(r.is_regular_pointed);
  EXPECT_EQ(r.t, 3u);
  EXPECT_EQ(r.affine_types, (std::vector<std::uint32_t>{1, 4}));
}

TEST(Classify, AgreesWithOracleOnGammaSets) {
  const auto plane = plane_of_order(81);
  const auto tn = oracle::trace_norm(plane->field());
  for (std::uint32_t a : {1u, 2u, 17u, 80u}) {
    const PointSet X = gamma_a(plane, Element{a});
    ASSERT_EQ(X, oracle::gamma(plane, tn, Element{a}));
    const auto o = oracle::pointed(oracle::count_lines(X));
    const TypeReport r = classify(X, standard_frame(*plane));
    EXPECT_TRUE(o.frame_ok);
    EXPECT_EQ(r.t, o.t);
    EXPECT_EQ(r.affine_types, o.types);
    EXPECT_EQ(r.is_regular_pointed, o.regular && o.t.has_value());
    EXPECT_EQ(r.affine_types, (std::vector<std::uint32_t>{4, 7, 10, 13}));
    EXPECT_EQ(r.t, 9u);
  }
}

TEST(Classify, QuadraticBoundaryIsNotRegular) {
  // Tr(y + a x^2) = N(x) with 4 N(a) = 1: lines of slope 0 split {0, 2q}.
  for (std::uint64_t q : {3u, 5u}) {
    const FieldPtr F = field_of_order(q * q);
    const Element a = quadratic_boundary_a(*F);
    const auto tn = oracle::trace_norm(*F);
    EXPECT_EQ(F->mul(F->add(F->add(F->one(), F->one()), F->add(F->one(), F->one())), tn.nm[a.index]), F->one());
    FamilySpec s{"quadratic", q};
    s.a = a.index;
    const PointSet X = build_family(s);
    const auto o = oracle::pointed(oracle::count_lines(X));
    const TypeReport r = classify(X, standard_frame(X.plane()));
    EXPECT_EQ(r.t, q);
    EXPECT_FALSE(r.is_regular_pointed);
    EXPECT_EQ(o.regular, false);
    EXPECT_EQ(r.affine_types, (std::vector<std::uint32_t>{0, static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(2 * q)}));
  }
}

TEST(Classify, FramesOfAConic) {
  // yz = x^2 over GF(5): every point is a frame with its tangent.
  const auto plane = plane_of_order(5);
  const Field& F = plane->field();
  PointSet C(plane);
  for (std::uint32_t x = 0; x < 5; ++x) C.insert(plane->affine_index(Element{x}, F.mul(Element{x}, Element{x})));
  C.insert(plane->infinity_index());
  const auto E = enumerate(C);
  const auto frames = auto_classify(C, E);
  ASSERT_EQ(frames.size(), 6u);
  for (const auto& r : frames) {
    EXPECT_TRUE(r.is_regular_pointed);
    EXPECT_EQ(r.t, 1u);
    EXPECT_EQ(r.affine_types, (std::vector<std::uint32_t>{0, 1, 2}));
  }
  EXPECT_EQ(auto_classify(C, E, 2).size(), 2u);
}

TEST(Classify, RejectsBadFrames) {
  const auto plane = plane_of_order(5);
  PointSet X(plane);
  X.insert(0);
  EXPECT_THROW(classify(X, standard_frame(*plane)), ClassifyError);
  X.insert(plane->infinity_index());
  X.insert(plane->direction_index(Element{1}));
  EXPECT_THROW(classify(X, standard_frame(*plane)), ClassifyError);
}

TEST(Classify, TypesWithinAndSqrt) {
  TypeReport r;
  r.affine_types = {1, 3, 7};
  const std::vector<std::uint32_t> allowed{1, 3, 5, 7};
  EXPECT_TRUE(types_within(r, allowed));
  r.affine_types.push_back(4);
  EXPECT_FALSE(types_within(r, allowed));
  EXPECT_EQ(exact_sqrt(625), 25u);
  EXPECT_EQ(exact_sqrt(0), 0u);
  EXPECT_FALSE(exact_sqrt(26).has_value());
}

}  // namespace
