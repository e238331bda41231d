#pragma once

// Independent reference computations for the tests. Nothing here goes
// through the enumerator, the constructions or the trace/norm helpers of the
// library; only Field::add/mul/pow and the index layout of Plane are used.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "regset/galois.hpp"
#include "regset/plane.hpp"

namespace oracle {

using regset::Element;
using regset::Field;
using regset::PointSet;

inline std::vector<std::uint32_t> digits(unsigned p, unsigned n, std::uint32_t v) {
  std::vector<std::uint32_t> d(n);
  for (unsigned i = 0; i < n; ++i, v /= p) d[i] = v % p;
  return d;
}

inline std::uint32_t undigits(unsigned p, const std::vector<std::uint32_t>& d) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

/// Schoolbook product of two residues modulo the monic polynomial `mod`.
inline std::uint32_t poly_mul(unsigned p, std::span<const std::uint32_t> mod, std::uint32_t a, std::uint32_t b) {
  const unsigned n = static_cast<unsigned>(mod.size()) - 1;
  const auto da = digits(p, n, a), db = digits(p, n, b);
  std::vector<std::uint64_t> c(2 * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p;
  for (unsigned k = 2 * n - 1; k-- > n;) {
    const std::uint64_t top = c[k] % p;
    c[k] = 0;
    for (unsigned i = 0; i < n; ++i) c[k - n + i] = (c[k - n + i] + p * p - top * mod[i] % p) % p;
  }
  std::vector<std::uint32_t> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(c[i] % p);
  return undigits(p, out);
}

inline std::uint32_t poly_add(unsigned p, unsigned n, std::uint32_t a, std::uint32_t b) {
  auto da = digits(p, n, a);
  const auto db = digits(p, n, b);
  for (unsigned i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
  return undigits(p, da);
}

/// Residue class of x modulo `mod`.
inline std::uint32_t poly_x(unsigned p, std::span<const std::uint32_t> mod) {
  if (mod.size() == 2) return (p - mod[0] % p) % p;
  return p;
}

/// Multiplicative order of x modulo `mod`, 0 if x is not invertible or the
/// powers never return to 1 within p^n steps.
inline std::uint64_t order_of_x(unsigned p, std::span<const std::uint32_t> mod) {
  const unsigned n = static_cast<unsigned>(mod.size()) - 1;
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < n; ++i) Q *= p;
  const std::uint32_t x = poly_x(p, mod);
  std::uint32_t acc = x;
  for (std::uint64_t k = 1; k <= Q; ++k) {
    if (acc == 1) return k;
    if (acc == 0) return 0;
    acc = poly_mul(p, mod, acc, x);
  }
  return 0;
}

/// First monic degree-n polynomial, by base-p value of c_0..c_{n-1}, whose
/// root has order p^n - 1.
inline std::vector<std::uint32_t> smallest_primitive(unsigned p, unsigned n) {
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < n; ++i) Q *= p;
  for (std::uint32_t v = 0; v < Q; ++v) {
    auto mod = digits(p, n, v);
    mod.push_back(1);
    if (order_of_x(p, mod) == Q - 1) return mod;
  }
  return {};
}

/// z^k by repeated multiplication.
inline Element power(const Field& F, Element z, std::uint64_t k) {
  Element r = F.one();
  for (std::uint64_t i = 0; i < k; ++i) r = F.mul(r, z);
  return r;
}

/// Tables of T(z) = z + z^q and N(z) = z^(q+1) over GF(q^2), built from
/// repeated squaring-free multiplication.
struct TraceNorm {
  std::uint64_t q = 0;
  std::vector<Element> tr, nm;
};

inline TraceNorm trace_norm(const Field& F) {
  TraceNorm t;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < F.degree() / 2; ++i) q *= F.characteristic();
  t.q = q;
  t.tr.resize(F.order());
  t.nm.resize(F.order());
  for (std::uint32_t z = 0; z < F.order(); ++z) {
    const Element zq = power(F, Element{z}, q);
    t.tr[z] = F.add(Element{z}, zq);
    t.nm[z] = F.mul(zq, Element{z});
  }
  return t;
}

/// {(x, y) : T(y + a x^r) = N(x)} ∪ {(∞)}, r = sqrt(q).
inline PointSet gamma(const regset::PlanePtr& plane, const TraceNorm& tn, Element a) {
  const Field& F = plane->field();
  std::uint64_t r = 1;
  while (r * r < tn.q) ++r;
  PointSet X(plane);
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    const Element fx = F.mul(a, power(F, Element{x}, r));
    for (std::uint32_t y = 0; y < F.order(); ++y)
      if (tn.tr[F.add(Element{y}, fx).index] == tn.nm[x]) X.insert(plane->affine_index(Element{x}, Element{y}));
  }
  X.insert(plane->infinity_index());
  return X;
}

/// y^q + y = x^(q+1) together with (∞).
inline PointSet hermitian(const regset::PlanePtr& plane, const TraceNorm& tn) {
  const Field& F = plane->field();
  PointSet X(plane);
  for (std::uint32_t x = 0; x < F.order(); ++x)
    for (std::uint32_t y = 0; y < F.order(); ++y)
      if (tn.tr[y] == tn.nm[x]) X.insert(plane->affine_index(Element{x}, Element{y}));
  X.insert(plane->infinity_index());
  return X;
}

/// Line sizes, counted by walking the members: every affine point (x, y)
/// lies on y = m x + (y - m x) for each m, and on x = const.
struct LineCounts {
  std::uint32_t Q = 0;
  std::vector<std::vector<std::uint32_t>> slope;  // [m][b]
  std::vector<std::uint32_t> vertical;            // [alpha], (∞) included
  std::uint32_t at_infinity = 0;
  bool infinity_member = false;
  std::uint64_t size = 0;
};

inline LineCounts count_lines(const PointSet& X) {
  const regset::Plane& P = X.plane();
  const Field& F = P.field();
  const std::uint32_t Q = P.order();
  LineCounts c;
  c.Q = Q;
  c.slope.assign(Q, std::vector<std::uint32_t>(Q, 0));
  c.vertical.assign(Q, 0);
  c.infinity_member = X.contains(P.infinity_index());
  for (std::uint32_t idx : X.members()) {
    ++c.size;
    if (!P.is_affine(idx)) {
      ++c.at_infinity;
      if (idx == P.infinity_index()) continue;
      const std::uint32_t d = idx - Q * Q;
      for (std::uint32_t b = 0; b < Q; ++b) ++c.slope[d][b];
      continue;
    }
    const Element x{idx / Q}, y{idx % Q};
    ++c.vertical[x.index];
    for (std::uint32_t m = 0; m < Q; ++m) ++c.slope[m][F.sub(y, F.mul(Element{m}, x)).index];
  }
  if (c.infinity_member)
    for (auto& v : c.vertical) ++v;
  return c;
}

/// i -> number of lines meeting X in i points.
inline std::map<std::uint32_t, std::uint64_t> spectrum(const LineCounts& c) {
  std::map<std::uint32_t, std::uint64_t> e;
  for (const auto& row : c.slope)
    for (auto v : row) ++e[v];
  for (auto v : c.vertical) ++e[v];
  ++e[c.at_infinity];
  return e;
}

/// Pointed/regular data at ((∞), l_∞).
struct Pointed {
  bool frame_ok = false;               // (∞) ∈ X and X ∩ l_∞ = {(∞)}
  std::optional<std::uint32_t> t;      // all verticals are (t+1)-secants, t > 0
  std::vector<std::uint32_t> types;    // sizes of the non-vertical affine lines
  bool regular = false;                // every slope class has the same sorted sizes
  std::vector<std::vector<std::uint32_t>> classes;  // sorted sizes per slope
};

inline Pointed pointed(const LineCounts& c) {
  Pointed r;
  r.frame_ok = c.infinity_member && c.at_infinity == 1;
  const std::uint32_t v0 = c.vertical.empty() ? 0 : c.vertical[0];
  if (v0 > 1 && std::all_of(c.vertical.begin(), c.vertical.end(), [&](auto v) { return v == v0; })) r.t = v0 - 1;
  std::set<std::uint32_t> types;
  for (const auto& row : c.slope) {
    auto s = row;
    std::sort(s.begin(), s.end());
    types.insert(s.begin(), s.end());
    r.classes.push_back(std::move(s));
  }
  r.types.assign(types.begin(), types.end());
  r.regular = std::all_of(r.classes.begin(), r.classes.end(), [&](const auto& s) { return s == r.classes[0]; });
  return r;
}

/// Per-slope counts of the sizes in `sizes`, nullopt unless every slope agrees.
inline std::optional<std::vector<std::uint64_t>> per_slope(const Pointed& p, const std::vector<std::uint32_t>& sizes) {
  std::optional<std::vector<std::uint64_t>> out;
  for (const auto& cls : p.classes) {
    std::vector<std::uint64_t> v;
    for (auto k : sizes) v.push_back(static_cast<std::uint64_t>(std::count(cls.begin(), cls.end(), k)));
    if (out && *out != v) return std::nullopt;
    out = v;
  }
  return out;
}

/// Weight enumerator of the projective code of X, every message walked and
/// every column evaluated.
inline std::map<std::uint64_t, std::uint64_t> code_weights(const PointSet& X) {
  const regset::Plane& P = X.plane();
  const Field& F = P.field();
  const std::uint32_t Q = P.order();
  std::vector<regset::Triple> cols;
  for (auto idx : X.members()) cols.push_back(P.triple(idx));
  std::map<std::uint64_t, std::uint64_t> w;
  for (std::uint32_t u0 = 0; u0 < Q; ++u0)
    for (std::uint32_t u1 = 0; u1 < Q; ++u1)
      for (std::uint32_t u2 = 0; u2 < Q; ++u2) {
        std::uint64_t wt = 0;
        for (const auto& c : cols) {
          const Element s = F.add(F.add(F.mul(Element{u0}, c[0]), F.mul(Element{u1}, c[1])), F.mul(Element{u2}, c[2]));
          if (s.index != 0) ++wt;
        }
        ++w[wt];
      }
  return w;
}

}  // namespace oracle
