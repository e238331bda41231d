#include "regset/census.hpp"

#include <algorithm>

#include "regset/classify.hpp"
#include "regset/codes.hpp"
#include "regset/constructions.hpp"

namespace regset {

bool LiftCensus::ok() const {
  return directions_match && class_sums_ok && vertical_ok && divisibility_ok.value_or(true) &&
         covered_count == ipow(q, s + 1);
}

namespace {

// Sizes of the q lines y = d x + b of AG(2, q) against the affine part of S.
std::vector<std::uint32_t> slope_class(const PointSet& S, Element d) {
  const Plane& P = S.plane();
  const Field& F = P.field();
  std::vector<std::uint32_t> sizes(F.order(), 0);
  for (std::uint32_t pi : S.members()) {
    if (!P.is_affine(pi)) continue;
    const Element b = F.sub(P.affine_y(pi), F.mul(d, P.affine_x(pi)));
    ++sizes[b.index];
  }
  return sizes;
}

}  // namespace

LiftCensus direction_census(const PointSet& lifted, const PointSet& S, const TowerMap& tower,
                            std::span<const Element> basis) {
  const Field& big = *tower.field();
  const Field& small = *tower.subfield();
  const Plane& P = lifted.plane();
  if (P.order() != big.order()) throw ClassifyError("lifted set is not over the tower's field");

  LiftCensus c;
  c.q = small.order();
  c.h = big.degree() / tower.sub_degree();
  c.s = static_cast<unsigned>(basis.size());
  const std::uint64_t Qh = big.order();
  const std::uint64_t qs = ipow(c.q, c.s);
  for (std::uint32_t pi : S.members())
    if (S.plane().is_affine(pi)) ++c.base_size;

  // d -> d0 for d ∈ GF(q) ⊕ I.
  const std::vector<Element> span = subspace_elements(tower, basis);
  std::vector<std::int64_t> d0_of(Qh, -1);
  for (std::uint32_t c0 = 0; c0 < c.q; ++c0)
    for (Element i : span) d0_of[big.add(tower.embed(Element{c0}), i).index] = c0;

  const IntersectionEnumerator E = enumerate(lifted);
  c.class_sums_ok = true;
  c.directions_match = true;
  for (std::uint32_t m = 0; m < Qh; ++m) {
    DirectionTally t;
    t.slope = m;
    t.observed = E.by_direction[m];
    if (d0_of[m] >= 0) {
      t.covered = true;
      ++c.covered_count;
      const auto base = slope_class(S, Element{static_cast<std::uint32_t>(d0_of[m])});
      if (base.size() != c.q) c.class_sums_ok = false;
      t.expected.assign(Qh - ipow(c.q, c.s + 1), 0);
      for (std::uint32_t k : base)
        for (std::uint64_t r = 0; r < qs; ++r) t.expected.push_back(k);
    } else {
      ++c.uncovered_count;
      const std::uint64_t tangents = qs * c.base_size;
      if (tangents <= Qh) {
        t.expected.assign(Qh - tangents, 0);
        t.expected.resize(Qh, 1);
      }
    }
    std::sort(t.expected.begin(), t.expected.end());
    if (!t.match()) c.directions_match = false;
    for (std::uint32_t k : t.observed) ++c.slope_totals[k];
    c.directions.push_back(std::move(t));
  }

  // Vertical lines: the parallel class of (∞) includes (∞) itself.
  std::vector<std::uint32_t> base_vertical(c.q, 0);
  for (std::uint32_t pi : S.members())
    if (S.plane().is_affine(pi)) ++base_vertical[S.plane().affine_x(pi).index];
  std::vector<std::uint32_t> expected_vertical(Qh - c.q, 0);
  for (std::uint32_t v : base_vertical) expected_vertical.push_back(static_cast<std::uint32_t>(qs * v));
  std::sort(expected_vertical.begin(), expected_vertical.end());
  std::vector<std::uint32_t> observed_vertical = E.by_direction.back();
  for (auto& v : observed_vertical) v -= lifted.contains(P.infinity_index()) ? 1 : 0;
  c.vertical_ok = observed_vertical == expected_vertical;

  if (c.s + 1 == c.h) {
    const std::uint64_t M = ipow(c.q, 2 * c.h - 1);
    c.divisibility_ok = std::all_of(c.slope_totals.begin(), c.slope_totals.end(),
                                    [&](const auto& kv) { return kv.second % M == 0; });
  }
  return c;
}

nlohmann::json to_json(const LiftCensus& c, bool with_directions) {
  nlohmann::json j;
  j["q"] = c.q;
  j["h"] = c.h;
  j["s"] = c.s;
  j["base_size"] = c.base_size;
  j["covered_directions"] = c.covered_count;
  j["uncovered_directions"] = c.uncovered_count;
  j["directions_match"] = c.directions_match;
  j["class_sums_ok"] = c.class_sums_ok;
  j["vertical_ok"] = c.vertical_ok;
  nlohmann::json totals = nlohmann::json::object();
  for (const auto& [k, n] : c.slope_totals) totals[std::to_string(k)] = n;
  j["slope_totals"] = totals;
  j["divisibility_ok"] = c.divisibility_ok ? nlohmann::json(*c.divisibility_ok) : nlohmann::json(nullptr);
  j["ok"] = c.ok();
  if (with_directions) {
    nlohmann::json d = nlohmann::json::array();
    for (const auto& t : c.directions)
      d.push_back({{"slope", t.slope}, {"covered", t.covered}, {"observed", t.observed}, {"match", t.match()}});
    j["directions"] = d;
  }
  return j;
}

}  // namespace regset
