#pragma once

// PG(2,Q) over a Field, with its affine part AG(2,Q).
//
// Points and lines share one index layout on their normalized coordinate
// triples: affine (x, y) -> x*Q + y, directions (1:d:0) -> Q^2 + d, and
// (0:1:0) -> Q^2 + Q. For lines the triple is [a:b:c] with ax + by + cz = 0,
// so the line at infinity [0:0:1] has index 0.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "regset/galois.hpp"

namespace regset {

using Triple = std::array<Element, 3>;

struct PlanePoint {
  Triple coords;
  std::uint32_t index = 0;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.index == b.index; }
};

struct PlaneLine {
  Triple coeffs;
  std::uint32_t index = 0;

  friend bool operator==(const PlaneLine& a, const PlaneLine& b) { return a.index == b.index; }
};

class Plane;
using PlanePtr = std::shared_ptr<const Plane>;

class Plane {
 public:
  explicit Plane(FieldPtr field);
  static PlanePtr create(FieldPtr field) { return std::make_shared<const Plane>(std::move(field)); }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t order() const { return q_; }
  /// Number of points, which is also the number of lines: Q^2 + Q + 1.
  std::uint32_t size() const { return q_ * q_ + q_ + 1; }

  std::uint32_t affine_index(Element x, Element y) const { return x.index * q_ + y.index; }
  std::uint32_t direction_index(Element d) const { return q_ * q_ + d.index; }
  std::uint32_t infinity_index() const { return q_ * q_ + q_; }
  bool is_affine(std::uint32_t point_index) const { return point_index < q_ * q_; }
  Element affine_x(std::uint32_t point_index) const { return {point_index / q_}; }
  Element affine_y(std::uint32_t point_index) const { return {point_index % q_}; }

  /// Index of the normalized triple; throws on the zero triple.
  std::uint32_t triple_index(const Triple& t) const;
  Triple triple(std::uint32_t index) const;

  PlanePoint point(std::uint32_t index) const;
  PlanePoint point(const Triple& coords) const;
  PlanePoint affine_point(Element x, Element y) const { return point(affine_index(x, y)); }
  PlanePoint infinity() const { return point(infinity_index()); }
  PlaneLine line(std::uint32_t index) const;
  PlaneLine line(const Triple& coeffs) const;

  std::uint32_t line_at_infinity_index() const { return 0; }
  PlaneLine line_at_infinity() const { return line(0u); }
  /// The affine line y = m x + b.
  std::uint32_t slope_line_index(Element m, Element b) const;
  /// The vertical line x = alpha.
  std::uint32_t vertical_line_index(Element alpha) const;

  bool incident(const Triple& point, const Triple& line) const;
  bool incident(const PlanePoint& P, const PlaneLine& l) const { return incident(P.coords, l.coeffs); }

  /// Throws std::invalid_argument when P == R.
  PlaneLine line_through(const PlanePoint& P, const PlanePoint& R) const;
  /// Throws std::invalid_argument for equal lines.
  PlanePoint meet(const PlaneLine& l, const PlaneLine& m) const;
  /// The Q+1 points of l in ascending index order.
  std::vector<PlanePoint> points_on_line(const PlaneLine& l) const;
  std::vector<std::uint32_t> point_indices_on_line(std::uint32_t line_index) const;
  /// The Q+1 lines through P in ascending index order.
  std::vector<PlaneLine> pencil(const PlanePoint& P) const;
  std::vector<std::uint32_t> pencil_indices(std::uint32_t point_index) const;
  /// The Q affine lines through a point D of the line at infinity.
  std::vector<PlaneLine> parallel_class(const PlanePoint& D) const;

 private:
  Triple cross(const Triple& u, const Triple& v) const;
  Triple normalize(const Triple& t) const;
  // Ascending indices of the normalized solutions of t . v = 0.
  std::vector<std::uint32_t> orthogonal_indices(const Triple& t) const;

  FieldPtr field_;
  std::uint32_t q_;
};

/// A set of points of PG(2,Q) stored as a membership bitmap.
class PointSet {
 public:
  explicit PointSet(PlanePtr plane, std::string label = {});

  const Plane& plane() const { return *plane_; }
  const PlanePtr& plane_ptr() const { return plane_; }
  const Field& field() const { return plane_->field(); }

  bool contains(std::uint32_t point_index) const {
    return (words_[point_index >> 6] >> (point_index & 63)) & 1u;
  }
  void insert(std::uint32_t point_index);
  void erase(std::uint32_t point_index);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Member indices in ascending order.
  std::vector<std::uint32_t> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.plane_->order() == b.plane_->order() && a.words_ == b.words_;
  }

 private:
  PlanePtr plane_;
  std::vector<std::uint64_t> words_;
  std::string label_;
};

}  // namespace regset
