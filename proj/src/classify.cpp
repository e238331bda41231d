#include "regset/classify.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "regset/parallel.hpp"

namespace regset {

namespace {

struct AffineMember {
  std::uint32_t log_x;  // kZero when x = 0
  Element y;
};
constexpr std::uint32_t kZero = 0xffffffffu;

}  // namespace

IntersectionEnumerator enumerate(const PointSet& X, unsigned workers) {
  const Plane& plane = X.plane();
  const Field& F = plane.field();
  const std::uint32_t Q = plane.order();

  IntersectionEnumerator E;
  E.plane_order = Q;
  E.set_size = X.size();
  E.line_sizes.assign(plane.size(), 0);

  std::vector<AffineMember> affine;
  std::vector<std::uint32_t> vertical(Q, 0);
  std::vector<std::uint8_t> direction_member(Q, 0);
  const bool has_infinity = X.contains(plane.infinity_index());
  for (std::uint32_t idx : X.members()) {
    if (plane.is_affine(idx)) {
      const Element x = plane.affine_x(idx);
      affine.push_back({x.index == 0 ? kZero : F.log(x), plane.affine_y(idx)});
      ++vertical[x.index];
    } else if (idx != plane.infinity_index()) {
      direction_member[idx - Q * Q] = 1;
    }
  }
  E.infinity_size = static_cast<std::uint32_t>(std::count(direction_member.begin(), direction_member.end(), 1)) +
                    (has_infinity ? 1u : 0u);
  E.line_sizes[plane.line_at_infinity_index()] = E.infinity_size;
  for (std::uint32_t a = 0; a < Q; ++a)
    E.line_sizes[plane.vertical_line_index(Element{a})] = vertical[a] + (has_infinity ? 1u : 0u);

  // Each slope owns a disjoint set of lines, so workers never share output.
  parallel_for(Q, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> count(Q);
    for (std::size_t mi = begin; mi < end; ++mi) {
      const Element m{static_cast<std::uint32_t>(mi)};
      std::fill(count.begin(), count.end(), 0);
      if (m.index == 0) {
        for (const auto& a : affine) ++count[a.y.index];
      } else {
        // b = y - m x
        const std::uint32_t lnm = F.log(F.neg(m));
        for (const auto& a : affine) {
          const Element prod = a.log_x == kZero ? Element{0} : F.exp(std::int64_t{lnm} + a.log_x);
          ++count[F.add(a.y, prod).index];
        }
      }
      const std::uint32_t extra = direction_member[mi];
      for (std::uint32_t b = 0; b < Q; ++b) E.line_sizes[plane.slope_line_index(m, Element{b})] = count[b] + extra;
    }
  });

  for (std::uint32_t s : E.line_sizes) ++E.global[s];

  E.by_direction.assign(Q + 1, {});
  for (std::uint32_t m = 0; m < Q; ++m) {
    auto& v = E.by_direction[m];
    v.reserve(Q);
    for (std::uint32_t b = 0; b < Q; ++b) v.push_back(E.line_sizes[plane.slope_line_index(Element{m}, Element{b})]);
    std::sort(v.begin(), v.end());
  }
  auto& vert = E.by_direction[Q];
  for (std::uint32_t a = 0; a < Q; ++a) vert.push_back(E.line_sizes[plane.vertical_line_index(Element{a})]);
  std::sort(vert.begin(), vert.end());
  return E;
}

DoubleCountCheck check_double_counting(const IntersectionEnumerator& E) {
  const std::uint64_t Q = E.plane_order;
  const std::uint64_t n = E.set_size;
  std::uint64_t lines = 0, inc = 0, pairs = 0;
  for (const auto& [i, e] : E.global) {
    lines += e;
    inc += i * e;
    pairs += std::uint64_t{i} * (i == 0 ? 0 : i - 1) * e;
  }
  DoubleCountCheck c;
  c.line_total = lines == Q * Q + Q + 1;
  c.incidences = inc == n * (Q + 1);
  c.pairs = pairs == n * (n == 0 ? 0 : n - 1);
  return c;
}

Frame standard_frame(const Plane& plane) { return {plane.infinity_index(), plane.line_at_infinity_index()}; }

TypeReport classify(const PointSet& X, const IntersectionEnumerator& E, Frame frame) {
  const Plane& plane = X.plane();
  if (E.line_sizes.size() != plane.size()) throw ClassifyError("enumerator does not belong to this plane");
  if (frame.point >= plane.size() || frame.line >= plane.size()) throw ClassifyError("frame index out of range");
  if (!X.contains(frame.point)) throw ClassifyError("distinguished point is not in the set");
  const PlanePoint P0 = plane.point(frame.point);
  const PlaneLine l0 = plane.line(frame.line);
  if (!plane.incident(P0, l0)) throw ClassifyError("frame line does not pass through the distinguished point");
  if (E.line_sizes[frame.line] != 1) throw ClassifyError("frame line is not tangent at the distinguished point");

  TypeReport r;
  r.frame = frame;

  // (iii): lines through P0 other than l0.
  std::vector<std::uint8_t> through_p0(plane.size(), 0);
  std::optional<std::uint32_t> common;
  bool uniform = true;
  for (std::uint32_t li : plane.pencil_indices(frame.point)) {
    through_p0[li] = 1;
    if (li == frame.line) continue;
    const std::uint32_t s = E.line_sizes[li];
    if (!common) {
      common = s;
    } else if (*common != s) {
      uniform = false;
    }
  }
  if (uniform && common && *common >= 1) {
    r.t = *common - 1;
    r.is_pointed = *r.t > 0;
  }

  // (i): realized sizes over lines missing P0.
  std::vector<std::uint8_t> seen(plane.order() + 2, 0);
  for (std::uint32_t li = 0; li < plane.size(); ++li)
    if (!through_p0[li]) seen[E.line_sizes[li]] = 1;
  for (std::uint32_t s = 0; s < seen.size(); ++s)
    if (seen[s]) r.affine_types.push_back(s);
  r.is_affine_type = true;

  // (ii): per-point multisets along l0 \ {P0}.
  std::optional<std::vector<std::uint32_t>> reference;
  bool regular = true;
  for (std::uint32_t pi : plane.point_indices_on_line(frame.line)) {
    if (pi == frame.point) continue;
    std::vector<std::uint32_t> sizes;
    sizes.reserve(plane.order());
    for (std::uint32_t li : plane.pencil_indices(pi))
      if (li != frame.line) sizes.push_back(E.line_sizes[li]);
    std::sort(sizes.begin(), sizes.end());
    if (!reference) {
      reference = std::move(sizes);
      for (std::uint32_t s : *reference) ++r.pencil_profile[s];
    } else if (*reference != sizes) {
      regular = false;
      break;
    }
  }
  r.is_regular_affine = regular;
  r.is_regular_pointed = r.is_regular_affine && r.is_pointed;
  return r;
}

TypeReport classify(const PointSet& X, Frame frame) { return classify(X, enumerate(X), frame); }

std::vector<TypeReport> auto_classify(const PointSet& X, const IntersectionEnumerator& E, std::size_t max_frames) {
  const Plane& plane = X.plane();
  if (max_frames == 0) max_frames = X.size();
  std::vector<TypeReport> out;
  for (std::uint32_t pi : X.members()) {
    for (std::uint32_t li : plane.pencil_indices(pi)) {
      if (out.size() >= max_frames) return out;
      if (E.line_sizes[li] == 1) out.push_back(classify(X, E, Frame{pi, li}));
    }
  }
  return out;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_unital(const PointSet& X, const IntersectionEnumerator& E) {
  const auto q = exact_sqrt(X.plane().order());
  if (!q) return false;
  if (X.size() != *q * *q * *q + 1) return false;
  for (const auto& [i, e] : E.global)
    if (e > 0 && i != 1 && i != *q + 1) return false;
  return true;
}

bool types_within(const TypeReport& r, std::span<const std::uint32_t> allowed) {
  return std::all_of(r.affine_types.begin(), r.affine_types.end(), [&](std::uint32_t s) {
    return std::find(allowed.begin(), allowed.end(), s) != allowed.end();
  });
}

nlohmann::json to_json(const IntersectionEnumerator& E, bool with_directions) {
  nlohmann::json j;
  j["plane_order"] = E.plane_order;
  j["set_size"] = E.set_size;
  j["infinity_size"] = E.infinity_size;
  nlohmann::json g = nlohmann::json::object();
  for (const auto& [i, e] : E.global) g[std::to_string(i)] = e;
  j["enumerator"] = g;
  if (with_directions) j["by_direction"] = E.by_direction;
  return j;
}

nlohmann::json to_json(const TypeReport& r) {
  nlohmann::json j;
  j["frame"] = {{"point", r.frame.point}, {"line", r.frame.line}};
  j["affine_types"] = r.affine_types;
  j["t"] = r.t ? nlohmann::json(*r.t) : nlohmann::json(nullptr);
  j["flags"] = {{"affine_type", r.is_affine_type},
                {"regular_affine", r.is_regular_affine},
                {"pointed", r.is_pointed},
                {"regular_pointed", r.is_regular_pointed}};
  nlohmann::json prof = nlohmann::json::object();
  for (const auto& [s, c] : r.pencil_profile) prof[std::to_string(s)] = c;
  j["pencil_profile"] = prof;
  return j;
}

}  // namespace regset
