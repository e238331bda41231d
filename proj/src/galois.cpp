#include "regset/galois.hpp"

#include <numeric>
#include <string>

namespace regset {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multiplies the digit vector by x modulo the monic polynomial with low
// coefficients `c`.
void times_x(std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& c, unsigned p) {
  const std::size_t n = d.size();
  const std::uint64_t lead = d[n - 1];
  for (std::size_t i = n - 1; i > 0; --i)
    d[i] = static_cast<std::uint32_t>((d[i - 1] + p - (lead * c[i]) % p) % p);
  d[0] = static_cast<std::uint32_t>((p - (lead * c[0]) % p) % p);
}

std::uint32_t pack(const std::vector<std::uint32_t>& d, unsigned p) {
  std::uint64_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return static_cast<std::uint32_t>(idx);
}

// Fills `exp` with the powers of x if x has order exactly Q-1 modulo the
// candidate polynomial.
bool powers_of_x(const std::vector<std::uint32_t>& c, unsigned p, unsigned n, std::uint32_t q,
                 std::vector<std::uint32_t>* exp) {
  if (c[0] == 0) return false;
  std::vector<std::uint32_t> d(n, 0);
  d[0] = 1;
  if (exp) (*exp)[0] = 1;
  for (std::uint32_t k = 1; k < q; ++k) {
    times_x(d, c, p);
    const std::uint32_t idx = pack(d, p);
    if (idx == 1) return k == q - 1;
    if (idx == 0) return false;
    if (exp) (*exp)[k] = idx;
  }
  return false;
}

}  // namespace

FieldPtr Field::create(unsigned p, unsigned n) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1 || n > kMaxDegree) throw FieldError("extension degree must lie in [1, 8]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds 2^20");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->n_ = n;
  f->q_ = static_cast<std::uint32_t>(q);
  const std::uint32_t Q = f->q_;

  std::vector<std::uint32_t> c(n, 0);
  bool found = false;
  for (std::uint64_t code = 0; code < q && !found; ++code) {
    std::uint64_t v = code;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    found = powers_of_x(c, p, n, Q, nullptr);
  }
  if (!found) throw FieldError("no primitive polynomial found");  // unreachable for prime p

  f->modulus_ = c;
  f->modulus_.push_back(1);

  f->exp_.assign(2 * static_cast<std::size_t>(Q - 1), 0);
  std::vector<std::uint32_t> powers(Q - 1, 0);
  powers_of_x(c, p, n, Q, &powers);
  for (std::uint32_t k = 0; k < Q - 1; ++k) {
    f->exp_[k] = powers[k];
    f->exp_[k + Q - 1] = powers[k];
  }
  f->log_.assign(Q, kNoLog);
  for (std::uint32_t k = 0; k < Q - 1; ++k) f->log_[powers[k]] = k;

  // 1 + e only touches digit 0.
  f->zech_.assign(Q - 1, kNoLog);
  for (std::uint32_t k = 0; k < Q - 1; ++k) {
    const std::uint32_t e = powers[k];
    const std::uint32_t s = (e % p == p - 1) ? e - (p - 1) : e + 1;
    f->zech_[k] = s == 0 ? kNoLog : f->log_[s];
  }

  f->neg_.assign(Q, 0);
  for (std::uint32_t e = 0; e < Q; ++e) {
    std::uint64_t v = e, out = 0, place = 1;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint64_t dgt = v % p;
      v /= p;
      out += ((p - dgt) % p) * place;
      place *= p;
    }
    f->neg_[e] = static_cast<std::uint32_t>(out);
  }
  return f;
}

void Field::check(Element e) const {
  if (e.index >= q_) throw FieldError("element index " + std::to_string(e.index) + " out of range");
}

void Field::check_sub_degree(unsigned m) const {
  if (m == 0 || n_ % m != 0)
    throw FieldError("sub-degree " + std::to_string(m) + " does not divide " + std::to_string(n_));
}

Element Field::element(std::uint32_t index) const {
  Element e{index};
  check(e);
  return e;
}

Element Field::exp(std::int64_t k) const {
  const std::int64_t m = q_ - 1;
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return {exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::log(Element e) const {
  check(e);
  if (e.index == 0) throw FieldError("logarithm of zero");
  return log_[e.index];
}

Element Field::inv(Element e) const {
  check(e);
  if (e.index == 0) throw FieldError("inversion of zero");
  const std::uint32_t l = log_[e.index];
  return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element e, std::int64_t k) const {
  check(e);
  if (e.index == 0) {
    if (k > 0) return {0};
    if (k == 0) return {1};
    throw FieldError("negative power of zero");
  }
  const std::int64_t m = q_ - 1;
  std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(log_[e.index]) * k) % m);
  if (r < 0) r += m;
  return {exp_[static_cast<std::size_t>(r)]};
}

Element Field::frobenius(Element e, std::int64_t k) const {
  check(e);
  if (e.index <= 1 || q_ == 2) return e;
  // The Frobenius has order n, so k reduces mod n.
  std::int64_t kk = k % static_cast<std::int64_t>(n_);
  if (kk < 0) kk += n_;
  const std::uint64_t pk = ipow(p_, static_cast<unsigned>(kk)) % (q_ - 1);
  return {exp_[(static_cast<std::uint64_t>(log_[e.index]) * pk) % (q_ - 1)]};
}

Element Field::rel_trace(Element e, unsigned m) const {
  check_sub_degree(m);
  check(e);
  Element acc{0};
  for (unsigned j = 0; j < n_ / m; ++j) acc = add(acc, frobenius(e, static_cast<std::int64_t>(m) * j));
  return acc;
}

Element Field::rel_norm(Element e, unsigned m) const {
  check_sub_degree(m);
  const std::uint64_t sub = ipow(p_, m) - 1;
  return pow(e, static_cast<std::int64_t>((q_ - 1) / sub));
}

bool Field::is_square(Element e) const {
  check(e);
  if (p_ == 2 || e.index == 0) return true;
  return log_[e.index] % 2 == 0;
}

bool Field::in_subfield(Element e, unsigned m) const {
  check_sub_degree(m);
  return frobenius(e, m) == e;
}

std::uint32_t Field::multiplicative_order(Element e) const {
  const std::uint32_t l = log(e);
  return (q_ - 1) / std::gcd(l, q_ - 1);
}

std::vector<std::uint32_t> Field::digits(Element e) const {
  check(e);
  std::vector<std::uint32_t> d(n_);
  std::uint32_t v = e.index;
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Element Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() != n_) throw FieldError("digit vector has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw FieldError("digit out of range");
    idx = idx * p_ + d[i];
  }
  return {static_cast<std::uint32_t>(idx)};
}

TowerMap::TowerMap(FieldPtr big, unsigned sub_degree) : big_(std::move(big)), sub_degree_(sub_degree) {
  if (!big_) throw FieldError("null field");
  if (sub_degree == 0 || big_->degree() % sub_degree != 0)
    throw FieldError("sub-degree must divide the extension degree");
  sub_ = Field::create(big_->characteristic(), sub_degree);

  const auto mod = sub_->modulus();
  Element root{0};
  bool found = false;
  for (std::uint32_t r = 0; r < big_->order() && !found; ++r) {
    Element acc{0};
    Element power{1};
    for (std::size_t i = 0; i < mod.size(); ++i) {
      acc = big_->add(acc, big_->mul(Element{mod[i]}, power));
      power = big_->mul(power, Element{r});
    }
    if (acc.index == 0) {
      root = Element{r};
      found = true;
    }
  }
  if (!found) throw FieldError("subfield modulus has no root in the extension");

  const std::uint32_t qs = sub_->order();
  table_.assign(qs, 0);
  back_.assign(big_->order(), -1);
  back_[0] = 0;
  for (std::uint32_t k = 0; k + 1 < qs; ++k) {
    const Element s = sub_->exp(k);
    const Element b = big_->pow(root, k);
    table_[s.index] = b.index;
    back_[b.index] = s.index;
  }
}

Element TowerMap::embed(Element sub_elt) const {
  if (sub_elt.index >= table_.size()) throw FieldError("element not in subfield");
  return {table_[sub_elt.index]};
}

Element TowerMap::restrict(Element big_elt) const {
  if (big_elt.index >= back_.size() || back_[big_elt.index] < 0)
    throw FieldError("element does not lie in the subfield image");
  return {static_cast<std::uint32_t>(back_[big_elt.index])};
}

}  // namespace regset
