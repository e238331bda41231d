#pragma once

// Line-intersection enumeration and type classification of point sets.
//
// A frame is a point P0 of the set together with a tangent l0 at P0. With
// respect to a frame a set is
//   - of affine type: every line missing P0 meets it in one of the reported
//     sizes (always true for the realized size list);
//   - regular: every point P of l0 \ {P0} sees the same multiset of sizes
//     over the lines through P other than l0;
//   - pointed with parameter t > 0: all lines through P0 other than l0 carry
//     exactly t + 1 points of the set.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "regset/plane.hpp"

namespace regset {

class ClassifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IntersectionEnumerator {
  std::uint32_t plane_order = 0;
  std::uint64_t set_size = 0;
  /// |X ∩ l| indexed by line index.
  std::vector<std::uint32_t> line_sizes;
  /// i -> e_i, the number of lines meeting the set in exactly i points.
  std::map<std::uint32_t, std::uint64_t> global;
  /// Sorted sizes over the parallel class of each point of the line at
  /// infinity; entry k belongs to point index Q^2 + k, so the last entry is
  /// the vertical class.
  std::vector<std::vector<std::uint32_t>> by_direction;
  std::uint32_t infinity_size = 0;
};

/// Exact enumerator; slopes are split across `workers` threads (0 = all cores).
IntersectionEnumerator enumerate(const PointSet& X, unsigned workers = 1);

struct DoubleCountCheck {
  bool line_total = false;     // sum e_i = Q^2 + Q + 1
  bool incidences = false;     // sum i e_i = |X| (Q + 1)
  bool pairs = false;          // sum i (i-1) e_i = |X| (|X| - 1)
  bool ok() const { return line_total && incidences && pairs; }
};
DoubleCountCheck check_double_counting(const IntersectionEnumerator& E);

struct Frame {
  std::uint32_t point = 0;
  std::uint32_t line = 0;
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// The frame ((∞), l_∞).
Frame standard_frame(const Plane& plane);

struct TypeReport {
  Frame frame;
  /// Distinct sizes over the lines not through P0, ascending.
  std::vector<std::uint32_t> affine_types;
  bool is_affine_type = false;
  bool is_regular_affine = false;
  std::optional<std::uint32_t> t;
  bool is_pointed = false;
  bool is_regular_pointed = false;
  /// size -> count over the lines through the first point of l0 \ {P0},
  /// excluding l0. When the set is regular this is the common profile.
  std::map<std::uint32_t, std::uint32_t> pencil_profile;
};

/// Throws ClassifyError unless P0 ∈ X, P0 ∈ l0 and X ∩ l0 = {P0}.
TypeReport classify(const PointSet& X, const IntersectionEnumerator& E, Frame frame);
TypeReport classify(const PointSet& X, Frame frame);

/// Reports for every frame (P0, tangent at P0), ordered by point then line
/// index, stopping after `max_frames` frames (0 = |X|).
std::vector<TypeReport> auto_classify(const PointSet& X, const IntersectionEnumerator& E,
                                      std::size_t max_frames = 0);

/// |X| = q^3 + 1 in PG(2, q^2) and every line meets X in 1 or q + 1 points.
bool is_unital(const PointSet& X, const IntersectionEnumerator& E);

/// Realized affine types are contained in `allowed`.
bool types_within(const TypeReport& r, std::span<const std::uint32_t> allowed);

/// Integer square root when n is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

nlohmann::json to_json(const IntersectionEnumerator& E, bool with_directions = false);
nlohmann::json to_json(const TypeReport& r);

}  // namespace regset
