#include "regset/codes.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "regset/parallel.hpp"

namespace regset {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

unsigned matrix_rank(const Field& F, std::vector<std::vector<Element>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  unsigned rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].index == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Element inv = F.inv(rows[rank][c]);
    for (auto& e : rows[rank]) e = F.mul(e, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].index == 0) continue;
      const Element f = rows[r][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

GeneratorMatrix code_from_set(const PointSet& X) {
  if (X.size() < 3) throw CodeError("a projective code needs at least 3 points");
  GeneratorMatrix G;
  G.field = X.plane().field_ptr();
  for (std::uint32_t pi : X.members()) {
    const Triple t = X.plane().triple(pi);
    for (int r = 0; r < 3; ++r) G.rows[r].push_back(t[r]);
  }
  const unsigned rank = matrix_rank(*G.field, {G.rows[0], G.rows[1], G.rows[2]});
  if (rank < 3) throw CodeError("point set does not span the plane (rank " + std::to_string(rank) + ")");
  return G;
}

void write_generator_matrix(std::ostream& os, const GeneratorMatrix& G) {
  const Field& F = *G.field;
  os << F.characteristic() << ' ' << F.degree();
  for (std::uint32_t c : F.modulus()) os << ' ' << c;
  os << ' ' << F.order() << ' ' << 3 << ' ' << G.cols() << '\n';
  for (const auto& row : G.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].index;
    os << '\n';
  }
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t s = 0;
  for (const auto& [w, a] : coeffs) s += a;
  return s;
}

WeightEnumerator weights_from_enumerator(const PointSet& X, const IntersectionEnumerator& E) {
  WeightEnumerator W;
  W.length = X.size();
  W.field_order = X.plane().order();
  W.coeffs[0] = 1;
  for (const auto& [i, e] : E.global) {
    if (e == 0) continue;
    W.coeffs[W.length - i] += std::uint64_t{W.field_order - 1} * e;
  }
  return W;
}

WeightEnumerator weights_exhaustive(const GeneratorMatrix& G, unsigned workers) {
  const Field& F = *G.field;
  const std::uint64_t Q = F.order();
  const std::uint64_t messages = Q * Q * Q;
  if (messages > kMaxExhaustiveMessages) throw CodeError("Q^3 exceeds the exhaustive enumeration bound 2^24");
  const std::size_t n = G.cols();

  const unsigned w = resolve_workers(workers);
  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, w), std::vector<std::uint64_t>(n + 1, 0));
  std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(w, messages));
  parallel_for(chunks, w, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t chunk = cb; chunk < ce; ++chunk) {
      auto& hist = partial[chunk];
      const std::uint64_t begin = messages * chunk / chunks;
      const std::uint64_t end = messages * (chunk + 1) / chunks;
      for (std::uint64_t msg = begin; msg < end; ++msg) {
        const Element u0{static_cast<std::uint32_t>(msg / (Q * Q))};
        const Element u1{static_cast<std::uint32_t>((msg / Q) % Q)};
        const Element u2{static_cast<std::uint32_t>(msg % Q)};
        std::size_t weight = 0;
        for (std::size_t j = 0; j < n; ++j) {
          const Element c =
              F.add(F.add(F.mul(u0, G.rows[0][j]), F.mul(u1, G.rows[1][j])), F.mul(u2, G.rows[2][j]));
          if (c.index != 0) ++weight;
        }
        ++hist[weight];
      }
    }
  });

  WeightEnumerator W;
  W.length = n;
  W.field_order = static_cast<std::uint32_t>(Q);
  for (const auto& hist : partial)
    for (std::size_t k = 0; k <= n; ++k)
      if (hist[k]) W.coeffs[k] += hist[k];
  return W;
}

std::uint64_t divisibility(const WeightEnumerator& W) {
  std::uint64_t g = 0;
  for (const auto& [w, a] : W.coeffs)
    if (w > 0 && a > 0) g = std::gcd(g, w);
  return g;
}

std::map<std::uint64_t, std::uint64_t> reduce_mod(const WeightEnumerator& W, std::uint64_t M) {
  if (M < 2) throw CodeError("modulus must be at least 2");
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [w, a] : W.coeffs)
    if (a % M != 0) out[w] = a % M;
  return out;
}

std::string render_residues(const std::map<std::uint64_t, std::uint64_t>& r, std::uint64_t M, bool signed_form) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, a] : r) {
    bool negative = signed_form && a > M / 2;
    const std::uint64_t mag = negative ? M - a : a;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (w == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "x^" << w;
    }
  }
  if (first) os << "0";
  return os.str();
}

unsigned dual_distance_geometric(const IntersectionEnumerator& E) {
  std::uint32_t max_size = 0;
  for (const auto& [i, e] : E.global)
    if (e > 0) max_size = std::max(max_size, i);
  if (max_size >= 3) return 3;
  if (E.set_size >= 4) return 4;
  return 0;
}

unsigned dual_distance_exhaustive(const GeneratorMatrix& G) {
  const Field& F = *G.field;
  const std::size_t n = G.cols();
  auto col = [&](std::size_t j) { return std::vector<Element>{G.rows[0][j], G.rows[1][j], G.rows[2][j]}; };
  auto dependent = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Element>> rows;
    for (std::size_t j : idx) rows.push_back(col(j));
    return matrix_rank(F, rows) < idx.size();
  };
  for (std::size_t j = 0; j < n; ++j)
    if (dependent({j})) return 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (dependent({a, b})) return 2;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (dependent({a, b, c})) return 3;
  // Any four vectors of GF(Q)^3 are dependent.
  return n >= 4 ? 4 : 0;
}

CodeReport code_report(const PointSet& X, const IntersectionEnumerator& E) {
  const GeneratorMatrix G = code_from_set(X);
  CodeReport r;
  r.n = X.size();
  r.k = 3;
  r.weights = weights_from_enumerator(X, E);
  for (const auto& [w, a] : r.weights.coeffs)
    if (w > 0 && a > 0) r.weight_list.push_back(w);
  r.d_min = r.weight_list.empty() ? 0 : r.weight_list.front();
  r.divisor = divisibility(r.weights);
  r.dual_n = r.n;
  r.dual_k = r.n - r.k;
  if (X.plane().order() <= 9) {
    r.dual_distance = dual_distance_exhaustive(G);
    r.dual_distance_method = "exhaustive";
  } else {
    r.dual_distance = dual_distance_geometric(E);
    r.dual_distance_method = "projective";
  }
  return r;
}

bool DivisibilityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CongruenceCheck& c) { return c.pass; });
}

namespace {

std::uint64_t coeff(const IntersectionEnumerator& E, std::uint32_t i) {
  const auto it = E.global.find(i);
  return it == E.global.end() ? 0 : it->second;
}

CongruenceCheck congruence(std::string statement, const IntersectionEnumerator& E, std::uint32_t i,
                           std::uint64_t modulus, std::uint64_t expected) {
  CongruenceCheck c{std::move(statement), i, coeff(E, i), modulus, expected, false};
  c.pass = modulus == 0 ? c.value == expected : c.value % modulus == expected % modulus;
  return c;
}

}  // namespace

DivisibilityReport enumerator_divisibility_check(const IntersectionEnumerator& E, const FamilyTag& tag) {
  DivisibilityReport rep;
  const std::uint64_t q = tag.q;
  switch (tag.kind) {
    case FamilyTag::Kind::RegularPointed: {
      const std::uint64_t M = ipow(q, tag.h);
      rep.checks.push_back(congruence("e_1 = 1 mod q^h", E, 1, M, 1));
      for (const auto& [i, e] : E.global)
        if (i != 1 && e > 0) rep.checks.push_back(congruence("e_i = 0 mod q^h", E, i, M, 0));
      break;
    }
    case FamilyTag::Kind::TraceNorm: {
      if (tag.h != 2) throw CodeError("trace-norm family lives in PG(2, q^2)");
      const std::uint64_t M = q * q * q;
      const auto special = static_cast<std::uint32_t>(q + 1);
      rep.checks.push_back(congruence("e_1 = 1 mod q^3", E, 1, M, 1));
      rep.checks.push_back(congruence("e_{q+1} = q^2 mod q^3", E, special, M, q * q));
      for (const auto& [i, e] : E.global)
        if (i != 1 && i != special && e > 0) rep.checks.push_back(congruence("e_i = 0 mod q^3", E, i, M, 0));
      break;
    }
    case FamilyTag::Kind::Lift: {
      const std::uint64_t M = ipow(q, 2 * tag.s + 1);
      const auto special = static_cast<std::uint32_t>(ipow(q, tag.s) * tag.t + 1);
      const std::uint64_t qh = ipow(q, tag.h);
      rep.checks.push_back(congruence("e_1 = q^h - q + 1 mod q^(2s+1)", E, 1, M, (qh - q + 1) % M));
      rep.checks.push_back(congruence("e_{q^s t + 1} = q", E, special, 0, q));
      for (const auto& [i, e] : E.global)
        if (i != 1 && i != special && e > 0) rep.checks.push_back(congruence("e_i = 0 mod q^(2s+1)", E, i, M, 0));
      break;
    }
  }
  return rep;
}

FamilyTag parse_family_tag(const std::string& name, std::uint64_t q, unsigned h, unsigned s, std::uint64_t t) {
  FamilyTag tag;
  tag.q = q;
  tag.h = h;
  tag.s = s;
  tag.t = t;
  if (name == "regular-pointed") {
    tag.kind = FamilyTag::Kind::RegularPointed;
  } else if (name == "trace-norm") {
    tag.kind = FamilyTag::Kind::TraceNorm;
  } else if (name == "lift") {
    tag.kind = FamilyTag::Kind::Lift;
  } else {
    throw CodeError("unknown family tag '" + name + "'");
  }
  return tag;
}

std::uint64_t reduction_modulus(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyTag::Kind::RegularPointed: return ipow(tag.q, tag.h);
    case FamilyTag::Kind::TraceNorm: return ipow(tag.q, 3);
    case FamilyTag::Kind::Lift: return ipow(tag.q, 2 * tag.s + 1);
  }
  return 0;
}

std::map<std::uint64_t, std::uint64_t> expected_reduction(const FamilyTag& tag, std::uint64_t set_size) {
  const std::uint64_t M = reduction_modulus(tag);
  const std::uint64_t q = tag.q;
  std::map<std::uint64_t, std::uint64_t> out;
  auto add = [&](std::uint64_t w, std::uint64_t a) {
    out[w] = (out[w] + a % M) % M;
    if (out[w] == 0) out.erase(w);
  };
  add(0, 1);
  switch (tag.kind) {
    case FamilyTag::Kind::RegularPointed:
      // 1 - x^{|X|-1}
      add(set_size - 1, M - 1);
      break;
    case FamilyTag::Kind::TraceNorm:
      // 1 - q^2 x^{q^3-q} + (q^2-1) x^{q^3}
      add(q * q * q - q, M - q * q);
      add(q * q * q, q * q - 1);
      break;
    case FamilyTag::Kind::Lift: {
      // 1 + (q^{h+1} - q) x^{t q^s (q-1)} + (-q^{h+1} + q - 1) x^{t q^{s+1}}
      const std::uint64_t qh1 = ipow(q, tag.h + 1) % M;
      const std::uint64_t qs = ipow(q, tag.s);
      add(tag.t * qs * (q - 1), (qh1 + M - q % M) % M);
      add(tag.t * qs * q, ((M - qh1) + q - 1) % M);
      break;
    }
  }
  return out;
}

nlohmann::json to_json(const WeightEnumerator& W) {
  nlohmann::json j;
  j["length"] = W.length;
  j["field_order"] = W.field_order;
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [w, a] : W.coeffs) c[std::to_string(w)] = a;
  j["coeffs"] = c;
  return j;
}

nlohmann::json to_json(const CodeReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d_min"] = r.d_min;
  j["weight_list"] = r.weight_list;
  j["divisor"] = r.divisor;
  j["dual"] = {{"n", r.dual_n}, {"k", r.dual_k}, {"d", r.dual_distance}, {"method", r.dual_distance_method}};
  j["weights"] = to_json(r.weights);
  return j;
}

nlohmann::json to_json(const DivisibilityReport& r) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : r.checks)
    j.push_back({{"statement", c.statement},
                 {"i", c.i},
                 {"e_i", c.value},
                 {"modulus", c.modulus},
                 {"expected", c.expected},
                 {"pass", c.pass}});
  return j;
}

}  // namespace regset
