#include <gtest/gtest.h>

#include <set>

#include "regset/plane.hpp"

using namespace regset;

namespace {

bool on(const Field& F, const Triple& P, const Triple& l) {
  const Element s = F.add(F.add(F.mul(P[0], l[0]), F.mul(P[1], l[1])), F.mul(P[2], l[2]));
  return s.index == 0;
}

class PlaneAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(PlaneAxioms, IncidenceStructure) {
  const auto [p, n] = GetParam();
  const auto plane = Plane::create(create_field(p, n));
  const Field& F = plane->field();
  const std::uint32_t N = plane->size();
  const std::uint32_t Q = plane->order();

  std::vector<std::vector<std::uint32_t>> on_line(N);
  for (std::uint32_t l = 0; l < N; ++l) {
    const Triple L = plane->line(l).coeffs;
    for (std::uint32_t P = 0; P < N; ++P)
      if (on(F, plane->triple(P), L)) on_line[l].push_back(P);
    ASSERT_EQ(on_line[l].size(), Q + 1u);
    EXPECT_EQ(plane->point_indices_on_line(l), on_line[l]);
  }
  std::vector<std::uint32_t> degree(N, 0);
  for (const auto& pts : on_line)
    for (auto P : pts) ++degree[P];
  for (auto d : degree) EXPECT_EQ(d, Q + 1u);

  for (std::uint32_t P = 0; P < N; ++P) {
    const auto pencil = plane->pencil_indices(P);
    ASSERT_EQ(pencil.size(), Q + 1u);
    for (auto l : pencil) EXPECT_TRUE(std::binary_search(on_line[l].begin(), on_line[l].end(), P));
  }

  // Two points span exactly one line, two lines meet in exactly one point.
  for (std::uint32_t A = 0; A < N; A += 3)
    for (std::uint32_t B = A + 1; B < N; B += 2) {
      const PlaneLine l = plane->line_through(plane->point(A), plane->point(B));
      std::uint32_t common = 0;
      for (std::uint32_t m = 0; m < N; ++m)
        if (std::binary_search(on_line[m].begin(), on_line[m].end(), A) &&
            std::binary_search(on_line[m].begin(), on_line[m].end(), B)) {
          ++common;
          EXPECT_EQ(m, l.index);
        }
      EXPECT_EQ(common, 1u);
      const PlanePoint M = plane->meet(plane->line(A), plane->line(B));
      EXPECT_TRUE(on(F, M.coords, plane->line(A).coeffs));
      EXPECT_TRUE(on(F, M.coords, plane->line(B).coeffs));
    }
}

INSTANTIATE_TEST_SUITE_P(Small, PlaneAxioms,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(3u, 1u), std::make_pair(2u, 2u),
                                           std::make_pair(5u, 1u), std::make_pair(7u, 1u), std::make_pair(2u, 3u),
                                           std::make_pair(3u, 2u), std::make_pair(2u, 4u)));

TEST(Plane, IndexLayout) {
  const auto plane = Plane::create(create_field(3, 2));
  const Field& F = plane->field();
  const std::uint32_t Q = 9;
  EXPECT_EQ(plane->size(), 91u);
  for (std::uint32_t x = 0; x < Q; ++x)
    for (std::uint32_t y = 0; y < Q; ++y) {
      const std::uint32_t i = plane->affine_index(Element{x}, Element{y});
      EXPECT_EQ(i, x * Q + y);
      EXPECT_EQ(plane->triple(i), (Triple{Element{x}, Element{y}, F.one()}));
      EXPECT_EQ(plane->triple_index(plane->triple(i)), i);
      // Scaling does not change the point.
      const Element s{5};
      EXPECT_EQ(plane->triple_index({F.mul(s, Element{x}), F.mul(s, Element{y}), s}), i);
    }
  for (std::uint32_t d = 0; d < Q; ++d) EXPECT_EQ(plane->triple(Q * Q + d), (Triple{F.one(), Element{d}, F.zero()}));
  EXPECT_EQ(plane->triple(plane->infinity_index()), (Triple{F.zero(), F.one(), F.zero()}));
  EXPECT_EQ(plane->line_at_infinity().coeffs, (Triple{F.zero(), F.zero(), F.one()}));
  EXPECT_THROW(plane->triple_index({F.zero(), F.zero(), F.zero()}), std::invalid_argument);
}

TEST(Plane, SlopeAndVerticalLines) {
  const auto plane = Plane::create(create_field(5, 1));
  const Field& F = plane->field();
  for (std::uint32_t m = 0; m < 5; ++m)
    for (std::uint32_t b = 0; b < 5; ++b) {
      const auto pts = plane->point_indices_on_line(plane->slope_line_index(Element{m}, Element{b}));
      std::set<std::uint32_t> want{plane->direction_index(Element{m})};
      for (std::uint32_t x = 0; x < 5; ++x)
        want.insert(plane->affine_index(Element{x}, F.add(F.mul(Element{m}, Element{x}), Element{b})));
      EXPECT_EQ(std::set<std::uint32_t>(pts.begin(), pts.end()), want);
    }
  for (std::uint32_t a = 0; a < 5; ++a) {
    const auto pts = plane->point_indices_on_line(plane->vertical_line_index(Element{a}));
    EXPECT_TRUE(std::count(pts.begin(), pts.end(), plane->infinity_index()));
    for (auto P : pts)
      if (plane->is_affine(P)) EXPECT_EQ(plane->affine_x(P), Element{a});
  }
  EXPECT_EQ(plane->parallel_class(plane->point(plane->direction_index(Element{2}))).size(), 5u);
}

TEST(PointSetBitmap, InsertEraseMembers) {
  const auto plane = Plane::create(create_field(2, 2));
  PointSet X(plane, "x");
  X.insert(20);
  X.insert(3);
  X.insert(3);
  EXPECT_EQ(X.size(), 2u);
  EXPECT_EQ(X.members(), (std::vector<std::uint32_t>{3, 20}));
  X.erase(3);
  EXPECT_FALSE(X.contains(3));
  EXPECT_THROW(X.insert(21), std::out_of_range);
}

}  // namespace
