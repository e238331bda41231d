#include "regset/plane.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace regset {

Plane::Plane(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("plane needs a field");
  q_ = field_->order();
}

Triple Plane::normalize(const Triple& t) const {
  const Field& F = *field_;
  Element s;
  if (t[2].index != 0) {
    s = F.inv(t[2]);
  } else if (t[0].index != 0) {
    s = F.inv(t[0]);
  } else if (t[1].index != 0) {
    s = F.inv(t[1]);
  } else {
    throw std::invalid_argument("zero coordinate triple");
  }
  return {F.mul(t[0], s), F.mul(t[1], s), F.mul(t[2], s)};
}

std::uint32_t Plane::triple_index(const Triple& t) const {
  const Triple n = normalize(t);
  if (n[2].index != 0) return n[0].index * q_ + n[1].index;
  if (n[0].index != 0) return q_ * q_ + n[1].index;
  return q_ * q_ + q_;
}

Triple Plane::triple(std::uint32_t index) const {
  if (index >= size()) throw std::out_of_range("plane index out of range");
  if (index < q_ * q_) return {Element{index / q_}, Element{index % q_}, Element{1}};
  if (index < q_ * q_ + q_) return {Element{1}, Element{index - q_ * q_}, Element{0}};
  return {Element{0}, Element{1}, Element{0}};
}

PlanePoint Plane::point(std::uint32_t index) const { return {triple(index), index}; }

PlanePoint Plane::point(const Triple& coords) const {
  const std::uint32_t idx = triple_index(coords);
  return {triple(idx), idx};
}

PlaneLine Plane::line(std::uint32_t index) const { return {triple(index), index}; }

PlaneLine Plane::line(const Triple& coeffs) const {
  const std::uint32_t idx = triple_index(coeffs);
  return {triple(idx), idx};
}

std::uint32_t Plane::slope_line_index(Element m, Element b) const {
  // m x - y + b = 0
  const Field& F = *field_;
  if (b.index != 0) {
    const Element ib = F.inv(b);
    return F.mul(m, ib).index * q_ + F.neg(ib).index;
  }
  if (m.index != 0) return q_ * q_ + F.neg(F.inv(m)).index;
  return q_ * q_ + q_;
}

std::uint32_t Plane::vertical_line_index(Element alpha) const {
  // x - alpha z = 0
  const Field& F = *field_;
  if (alpha.index == 0) return q_ * q_;
  return F.neg(F.inv(alpha)).index * q_;
}

bool Plane::incident(const Triple& p, const Triple& l) const {
  const Field& F = *field_;
  return F.add(F.add(F.mul(p[0], l[0]), F.mul(p[1], l[1])), F.mul(p[2], l[2])).index == 0;
}

Triple Plane::cross(const Triple& u, const Triple& v) const {
  const Field& F = *field_;
  return {F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])), F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
          F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]))};
}

PlaneLine Plane::line_through(const PlanePoint& P, const PlanePoint& R) const {
  if (P.index == R.index) throw std::invalid_argument("line_through needs two distinct points");
  return line(cross(P.coords, R.coords));
}

PlanePoint Plane::meet(const PlaneLine& l, const PlaneLine& m) const {
  if (l.index == m.index) throw std::invalid_argument("meet needs two distinct lines");
  return point(cross(l.coeffs, m.coeffs));
}

std::vector<std::uint32_t> Plane::orthogonal_indices(const Triple& t) const {
  const Field& F = *field_;
  Triple u, v;
  if (t[0].index != 0) {
    u = {F.neg(t[1]), t[0], Element{0}};
    v = {F.neg(t[2]), Element{0}, t[0]};
  } else if (t[1].index != 0) {
    u = {Element{1}, Element{0}, Element{0}};
    v = {Element{0}, F.neg(t[2]), t[1]};
  } else {
    u = {Element{1}, Element{0}, Element{0}};
    v = {Element{0}, Element{1}, Element{0}};
  }
  std::vector<std::uint32_t> out;
  out.reserve(q_ + 1);
  out.push_back(triple_index(v));
  for (std::uint32_t s = 0; s < q_; ++s) {
    const Element e{s};
    out.push_back(triple_index({F.add(u[0], F.mul(e, v[0])), F.add(u[1], F.mul(e, v[1])),
                                F.add(u[2], F.mul(e, v[2]))}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> Plane::point_indices_on_line(std::uint32_t line_index) const {
  return orthogonal_indices(triple(line_index));
}

std::vector<PlanePoint> Plane::points_on_line(const PlaneLine& l) const {
  std::vector<PlanePoint> out;
  for (std::uint32_t idx : orthogonal_indices(l.coeffs)) out.push_back(point(idx));
  return out;
}

std::vector<std::uint32_t> Plane::pencil_indices(std::uint32_t point_index) const {
  return orthogonal_indices(triple(point_index));
}

std::vector<PlaneLine> Plane::pencil(const PlanePoint& P) const {
  std::vector<PlaneLine> out;
  for (std::uint32_t idx : orthogonal_indices(P.coords)) out.push_back(line(idx));
  return out;
}

std::vector<PlaneLine> Plane::parallel_class(const PlanePoint& D) const {
  if (D.coords[2].index != 0) throw std::invalid_argument("parallel_class needs a point at infinity");
  std::vector<PlaneLine> out;
  for (std::uint32_t idx : orthogonal_indices(D.coords))
    if (idx != line_at_infinity_index()) out.push_back(line(idx));
  return out;
}

PointSet::PointSet(PlanePtr plane, std::string label) : plane_(std::move(plane)), label_(std::move(label)) {
  if (!plane_) throw std::invalid_argument("point set needs a plane");
  words_.assign((plane_->size() + 63) / 64, 0);
}

void PointSet::insert(std::uint32_t idx) {
  if (idx >= plane_->size()) throw std::out_of_range("point index out of range");
  words_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

void PointSet::erase(std::uint32_t idx) {
  if (idx >= plane_->size()) throw std::out_of_range("point index out of range");
  words_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

std::size_t PointSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint32_t> PointSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace regset
