#pragma once

// Table-driven arithmetic in GF(p^n).
//
// Elements are encoded as integers in [0, Q): the base-p digit i of the index
// is the coefficient of x^i in the polynomial representative. Multiplication
// goes through log/antilog tables, addition through a Zech logarithm table
// (plain XOR in characteristic 2).

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace regset {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A field element, identified by its digit-packed index.
struct Element {
  std::uint32_t index = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^n) with a deterministic primitive modulus.
///
/// The modulus is the monic primitive polynomial of degree n whose coefficient
/// vector c_0..c_{n-1}, read as the base-p integer sum c_i p^i, is smallest.
/// Instances are immutable once built and may be shared freely across threads.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
  static constexpr unsigned kMaxDegree = 8;

  /// Throws FieldError when p is not prime, n is outside [1, 8] or p^n > 2^20.
  static FieldPtr create(unsigned p, unsigned n);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients c_0..c_n of the modulus, low degree first, c_n = 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  /// The residue class of the variable; a primitive element.
  Element generator() const { return {exp_[1]}; }
  Element element(std::uint32_t index) const;
  /// g^k for the generator g.
  Element exp(std::int64_t k) const;
  /// Discrete logarithm to the generator; e must be nonzero.
  std::uint32_t log(Element e) const;

  Element add(Element a, Element b) const {
    if (a.index == 0) return b;
    if (b.index == 0) return a;
    if (p_ == 2) return {a.index ^ b.index};
    const std::uint32_t la = log_[a.index];
    std::uint32_t d = log_[b.index] + (q_ - 1) - la;
    if (d >= q_ - 1) d -= q_ - 1;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return {0};
    return {exp_[la + z]};
  }
  Element neg(Element a) const { return {neg_[a.index]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a.index == 0 || b.index == 0) return {0};
    return {exp_[log_[a.index] + log_[b.index]]};
  }
  /// Throws FieldError on a zero divisor.
  Element div(Element a, Element b) const;
  /// Throws FieldError for e = 0.
  Element inv(Element e) const;
  /// e^k with the exponent reduced mod Q-1; negative k requires e != 0.
  Element pow(Element e, std::int64_t k) const;

  /// e^(p^k).
  Element frobenius(Element e, std::int64_t k) const;
  /// Relative trace to GF(p^m): sum of e^(p^(m j)), j < n/m.
  Element rel_trace(Element e, unsigned m) const;
  /// Relative norm to GF(p^m): e^((p^n - 1)/(p^m - 1)).
  Element rel_norm(Element e, unsigned m) const;
  bool is_square(Element e) const;
  /// True iff e is fixed by x -> x^(p^m), i.e. lies in the subfield GF(p^m).
  bool in_subfield(Element e, unsigned m) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Element e) const;

  /// Base-p digits of e, low degree first (length n).
  std::vector<std::uint32_t> digits(Element e) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Field() = default;
  void check(Element e) const;
  void check_sub_degree(unsigned m) const;

  unsigned p_ = 0;
  unsigned n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // 2(Q-1) entries, so log sums need no reduction
  std::vector<std::uint32_t> log_;   // Q entries, log_[0] unused
  std::vector<std::uint32_t> zech_;  // log(1 + g^k) or kNoLog when 1 + g^k = 0
  std::vector<std::uint32_t> neg_;
};

inline FieldPtr create_field(unsigned p, unsigned n) { return Field::create(p, n); }

/// Embedding of GF(p^m) into GF(p^n) for m | n.
///
/// The subfield is built with create_field(p, m); its generator is sent to
/// the smallest-index root of the subfield modulus inside the big field, which
/// pins a unique field homomorphism onto the fixed field of x -> x^(p^m).
class TowerMap {
 public:
  TowerMap(FieldPtr big, unsigned sub_degree);

  unsigned sub_degree() const { return sub_degree_; }
  const FieldPtr& subfield() const { return sub_; }
  const FieldPtr& field() const { return big_; }
  Element embed(Element sub_elt) const;
  /// Inverse of embed on the image; throws FieldError outside it.
  Element restrict(Element big_elt) const;
  std::span<const std::uint32_t> table() const { return table_; }

 private:
  FieldPtr big_;
  FieldPtr sub_;
  unsigned sub_degree_;
  std::vector<std::uint32_t> table_;
  std::vector<std::int64_t> back_;  // big index -> sub index, -1 if outside
};

bool is_prime(std::uint64_t n);

}  // namespace regset
