#pragma once

// Direction census of a lifted set S' ∪ {(∞)} in PG(2, q^h).
//
// For each slope d of AG(2, q^h) the observed sizes over the parallel class
// of (d) are compared with the closed form predicted from S:
//   d = d0 + d1, d0 ∈ GF(q), d1 ∈ I:  q^h - q^(s+1) external lines plus q^s
//                                      copies of the class of (d0) in S;
//   otherwise:                         q^s |S| tangents, the rest external.
// Vertical lines carry 0 or q^s v points, v a vertical size of S.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "regset/galois.hpp"
#include "regset/plane.hpp"

namespace regset {

struct DirectionTally {
  std::uint32_t slope = 0;  // element index of d in GF(q^h)
  bool covered = false;     // d ∈ GF(q) ⊕ I
  std::vector<std::uint32_t> observed;
  std::vector<std::uint32_t> expected;
  bool match() const { return observed == expected; }
};

struct LiftCensus {
  std::uint64_t q = 0;
  unsigned h = 0;
  unsigned s = 0;
  std::uint64_t base_size = 0;  // affine points of S

  std::vector<DirectionTally> directions;
  std::uint64_t covered_count = 0;
  std::uint64_t uncovered_count = 0;
  bool directions_match = false;
  /// Every covered class of S has q lines in total.
  bool class_sums_ok = false;
  bool vertical_ok = false;
  /// Non-vertical k-secant totals, k -> count.
  std::map<std::uint32_t, std::uint64_t> slope_totals;
  /// Totals divisible by q^(2h-1); evaluated only for s = h - 1.
  std::optional<bool> divisibility_ok;

  bool ok() const;
};

/// `lifted` must be lift(S, tower, basis) and S a set over tower.subfield().
LiftCensus direction_census(const PointSet& lifted, const PointSet& S, const TowerMap& tower,
                            std::span<const Element> basis);

nlohmann::json to_json(const LiftCensus& c, bool with_directions = false);

}  // namespace regset
