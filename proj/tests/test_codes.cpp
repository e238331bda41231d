#include <gtest/gtest.h>

#include <sstream>

#include "oracle.hpp"
#include "regset/codes.hpp"
#include "regset/constructions.hpp"
#include "regset/families.hpp"

using namespace regset;

namespace {

std::map<std::uint64_t, std::uint64_t> as_map(const WeightEnumerator& W) { return W.coeffs; }

TEST(Codes, GeometricRouteMatchesMessageWalk) {
  std::vector<PointSet> sets;
  sets.push_back(hermitian_unital(plane_of_order(4)));
  sets.push_back(hermitian_unital(plane_of_order(9)));
  sets.push_back(oval_set(plane_of_order(5), 2));
  sets.push_back(oval_set(plane_of_order(7), 4));
  for (std::uint32_t a : {1u, 2u, 3u}) sets.push_back(gamma_a(plane_of_order(16), Element{a}));
  for (const auto& X : sets) {
    const auto E = enumerate(X);
    const WeightEnumerator W = weights_from_enumerator(X, E);
    EXPECT_EQ(as_map(W), oracle::code_weights(X)) << X.label();
    EXPECT_EQ(W, weights_exhaustive(code_from_set(X), 2)) << X.label();
    EXPECT_EQ(W.total(), std::uint64_t{X.plane().order()} * X.plane().order() * X.plane().order());
  }
}

TEST(Codes, GammaReportAtQ16) {
  // q = 4: unital classes give [65,3,60] two-weight codes, the others [65,3,58].
  const auto plane = plane_of_order(16);
  std::map<std::string, int> classes;
  for (std::uint32_t a = 1; a < 16; ++a) {
    const PointSet X = gamma_a(plane, Element{a});
    const auto E = enumerate(X);
    const CodeReport r = code_report(X, E);
    EXPECT_EQ(r.n, 65u);
    EXPECT_EQ(r.k, 3u);
    if (is_unital(X, E)) {
      EXPECT_EQ(r.d_min, 60u);
      EXPECT_EQ(r.weight_list, (std::vector<std::uint64_t>{60, 64}));
      ++classes["unital"];
    } else {
      EXPECT_EQ(r.d_min, 58u);
      EXPECT_EQ(r.weight_list.size(), 4u);
      ++classes["other"];
    }
    EXPECT_EQ(r.divisor % 2, 0u);
    EXPECT_EQ(r.dual_n, 65u);
    EXPECT_EQ(r.dual_k, 62u);
    EXPECT_EQ(r.dual_distance, 3u);
  }
  EXPECT_EQ(classes["unital"] + classes["other"], 15);
  EXPECT_GT(classes["unital"], 0);
  EXPECT_GT(classes["other"], 0);
}

TEST(Codes, ReductionsAndRendering) {
  const PointSet X = gamma_a(plane_of_order(81), Element{1});
  const auto E = enumerate(X);
  const auto W = weights_from_enumerator(X, E);
  EXPECT_EQ(render_residues(reduce_mod(W, 729), 729, false), "1 + 648x^720 + 80x^729");
  EXPECT_EQ(render_residues(reduce_mod(W, 729), 729, true), "1 - 81x^720 + 80x^729");
  const FamilyTag tag = parse_family_tag("trace-norm", 9, 2, 0, 0);
  EXPECT_EQ(reduction_modulus(tag), 729u);
  EXPECT_EQ(reduce_mod(W, 729), expected_reduction(tag, X.size()));
  EXPECT_TRUE(enumerator_divisibility_check(E, tag).all_pass());
  EXPECT_EQ(divisibility(W), 3u);

  const PointSet O = oval_set(plane_of_order(7), 3);
  const auto EO = enumerate(O);
  const auto WO = weights_from_enumerator(O, EO);
  const std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {O.size() - 1, 6}};
  EXPECT_EQ(reduce_mod(WO, 7), want);
  EXPECT_EQ(expected_reduction(parse_family_tag("regular-pointed", 7, 1, 0, 0), O.size()), want);
}

TEST(Codes, DualDistance) {
  // A conic is an arc: no three columns are dependent.
  const auto plane = plane_of_order(5);
  const Field& F = plane->field();
  PointSet C(plane);
  for (std::uint32_t x = 0; x < 5; ++x) C.insert(plane->affine_index(Element{x}, F.mul(Element{x}, Element{x})));
  C.insert(plane->infinity_index());
  const auto E = enumerate(C);
  EXPECT_EQ(dual_distance_geometric(E), 4u);
  EXPECT_EQ(dual_distance_exhaustive(code_from_set(C)), 4u);
  const PointSet O = oval_set(plane, 3);
  EXPECT_EQ(dual_distance_geometric(enumerate(O)), 3u);
  EXPECT_EQ(dual_distance_exhaustive(code_from_set(O)), 3u);
}

TEST(Codes, GeneratorMatrixAndErrors) {
  const PointSet H = hermitian_unital(plane_of_order(4));
  const GeneratorMatrix G = code_from_set(H);
  EXPECT_EQ(G.cols(), 9u);
  EXPECT_EQ(matrix_rank(*G.field, {G.rows[0], G.rows[1], G.rows[2]}), 3u);
  std::stringstream ss;
  write_generator_matrix(ss, G);
  std::string line;
  int lines = 0;
  while (std::getline(ss, line)) ++lines;
  EXPECT_EQ(lines, 4);

  const auto plane = plane_of_order(5);
  PointSet collinear(plane);
  for (std::uint32_t x = 0; x < 5; ++x) collinear.insert(plane->affine_index(Element{x}, Element{0}));
  EXPECT_THROW(code_from_set(collinear), CodeError);
  PointSet two(plane);
  two.insert(0);
  two.insert(1);
  EXPECT_THROW(code_from_set(two), CodeError);
  const auto big = plane_of_order(343);
  PointSet frame(big);
  for (std::uint32_t i : {0u, 1u, 343u}) frame.insert(i);
  EXPECT_THROW(weights_exhaustive(code_from_set(frame)), CodeError);
  EXPECT_THROW(parse_family_tag("nope", 3, 1, 0, 0), std::invalid_argument);
}

TEST(Codes, LiftCongruences) {
  FamilySpec s{"lift", 5};
  s.h = 2;
  s.s = 1;
  const PointSet L = build_family(s);
  const auto tag = family_tag(s);
  ASSERT_TRUE(tag.has_value());
  EXPECT_EQ(tag->kind, FamilyTag::Kind::Lift);
  EXPECT_EQ(tag->t, 2u);
  const auto E = enumerate(L);
  EXPECT_TRUE(enumerator_divisibility_check(E, *tag).all_pass());
  EXPECT_EQ(reduce_mod(weights_from_enumerator(L, E), reduction_modulus(*tag)), expected_reduction(*tag, L.size()));
}

}  // namespace
