#include "regset/scans.hpp"

#include <algorithm>
#include <random>

#include "regset/constructions.hpp"
#include "regset/families.hpp"
#include "regset/parallel.hpp"

namespace regset {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

// Mixed-radix decode with digit 0 running fastest.
std::vector<std::uint32_t> decode(std::uint64_t code, std::uint32_t radix, unsigned len) {
  std::vector<std::uint32_t> out(len);
  for (unsigned j = 0; j < len; ++j) {
    out[j] = static_cast<std::uint32_t>(code % radix);
    code /= radix;
  }
  return out;
}

struct Triple4 {
  std::uint32_t a, m, d;
};

std::vector<Triple4> draw_triples(std::uint64_t Q, std::uint64_t n, std::uint64_t seed,
                                  std::optional<std::uint32_t> only_a) {
  std::mt19937_64 rng(seed);
  std::vector<Triple4> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto a = static_cast<std::uint32_t>(1 + rng() % (Q - 1));
    const auto m = static_cast<std::uint32_t>(rng() % Q);
    const auto d = static_cast<std::uint32_t>(rng() % Q);
    out.push_back({only_a.value_or(a), m, d});
  }
  return out;
}

}  // namespace

ScanFReport scan_f(std::uint64_t q, unsigned workers) {
  if (q != 2 && q != 3 && q != 4) throw ScanError("scan-f covers q in {2, 3, 4}");
  ScanFReport rep;
  rep.q = q;
  rep.scope = q == 4 ? "monomial-binomial" : "full";
  const PlanePtr P = plane_of_order(q * q);
  const Field& F = P->field();
  const unsigned len = F.degree();

  std::vector<std::vector<std::uint32_t>> maps;
  std::uint64_t total = 1;
  for (unsigned j = 0; j < len; ++j) total *= F.order();
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = decode(code, F.order(), len);
    const auto nonzero = std::count_if(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; });
    if (q == 4 && nonzero > 2) continue;
    maps.push_back(std::move(c));
  }

  rep.entries.resize(maps.size());
  parallel_for(maps.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      AdditiveMap f;
      for (std::uint32_t c : maps[k]) f.coeffs.push_back(Element{c});
      const PointSet X = trace_norm_set(P, f);
      const IntersectionEnumerator E = enumerate(X);
      ScanFEntry& entry = rep.entries[k];
      entry.coeffs = maps[k];
      const unsigned e = len / 2;
      for (unsigned j = 0; j < e; ++j)
        entry.reduced.push_back(F.add(f.coeffs[j], F.frobenius(f.coeffs[j + e], e)).index);
      entry.quadratic_exception = F.characteristic() == 2 && e >= 2 && entry.reduced[1] != 0 &&
                                  std::all_of(entry.reduced.begin() + 2, entry.reduced.end(),
                                              [](std::uint32_t c) { return c == 0; });
      entry.unital = is_unital(X, E);
      entry.report = classify(X, E, standard_frame(*P));
    }
  });

  rep.all_regular_pointed = true;
  rep.claim_holds = true;
  for (const auto& e : rep.entries) {
    if (!e.report.is_regular_pointed) rep.all_regular_pointed = false;
    if (e.unital) {
      ++rep.unitals;
    } else {
      ++rep.non_unitals;
      const std::size_t n = e.report.affine_types.size();
      rep.min_types_non_unital = std::min(rep.min_types_non_unital.value_or(n), n);
      if (n < 4 && !e.quadratic_exception) rep.claim_holds = false;
    }
  }
  return rep;
}

HermitianScanReport hermitian_scan(std::uint64_t q, std::uint64_t sample, std::uint64_t seed,
                                   std::optional<std::uint32_t> only_a, unsigned workers) {
  const auto root = exact_sqrt(q);
  if (!root) throw ScanError("hermitian-scan needs q to be a square");
  const FieldPtr F = field_of_order(q * q);
  if (F->degree() % 4 != 0) throw ScanError("hermitian-scan needs q to be a square");
  const std::uint32_t Q = F->order();
  if (only_a && (*only_a == 0 || *only_a >= Q)) throw ScanError("a must be a nonzero element index");
  const HermitianCounter counter(F, F->degree() / 4);

  HermitianScanReport rep;
  rep.q = q;
  const std::uint64_t r = *root;
  rep.allowed = {static_cast<std::uint32_t>(q - 2 * r + 1), static_cast<std::uint32_t>(q - r + 1),
                 static_cast<std::uint32_t>(q + 1), static_cast<std::uint32_t>(q + r + 1)};
  auto allowed = [&](std::uint32_t c) { return std::find(rep.allowed.begin(), rep.allowed.end(), c) != rep.allowed.end(); };

  if (sample == 0) {
    rep.exhaustive = true;
    std::vector<std::uint32_t> as;
    if (only_a) {
      as.push_back(*only_a);
    } else {
      for (std::uint32_t a = 1; a < Q; ++a) as.push_back(a);
    }
    struct PerA {
      std::map<std::uint32_t, std::uint64_t> hist;
      bool m_independent = true;
      std::vector<std::array<std::uint32_t, 4>> outliers;
    };
    std::vector<PerA> per(as.size());
    parallel_for(as.size(), workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        PerA& out = per[k];
        std::vector<std::uint32_t> reference;
        for (std::uint32_t m = 0; m < Q; ++m) {
          auto counts = counter.counts_over_d(Element{as[k]}, Element{m});
          for (std::uint32_t d = 0; d < Q; ++d) {
            ++out.hist[counts[d]];
            if (!allowed(counts[d]) && out.outliers.size() < kMaxWitnesses)
              out.outliers.push_back({as[k], m, d, counts[d]});
          }
          std::sort(counts.begin(), counts.end());
          if (m == 0) {
            reference = std::move(counts);
          } else if (counts != reference) {
            out.m_independent = false;
          }
        }
      }
    });
    rep.m_independent = true;
    for (const auto& pa : per) {
      for (const auto& [c, n] : pa.hist) rep.histogram[c] += n;
      if (!pa.m_independent) rep.m_independent = false;
      for (const auto& w : pa.outliers)
        if (rep.outliers.size() < kMaxWitnesses) rep.outliers.push_back(w);
    }
    rep.evaluations = std::uint64_t{as.size()} * Q * Q;
  } else {
    const auto triples = draw_triples(Q, sample, seed, only_a);
    std::vector<std::uint32_t> counts(triples.size());
    parallel_for(triples.size(), workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k)
        counts[k] = counter.count(Element{triples[k].a}, Element{triples[k].m}, Element{triples[k].d});
    });
    for (std::size_t k = 0; k < triples.size(); ++k) {
      ++rep.histogram[counts[k]];
      if (!allowed(counts[k]) && rep.outliers.size() < kMaxWitnesses)
        rep.outliers.push_back({triples[k].a, triples[k].m, triples[k].d, counts[k]});
    }
    rep.evaluations = triples.size();
  }
  rep.all_allowed = std::all_of(rep.histogram.begin(), rep.histogram.end(),
                                [&](const auto& kv) { return allowed(kv.first); });
  return rep;
}

ConjectureReport conjecture(unsigned p, unsigned h, std::uint64_t sample, std::uint64_t seed, unsigned workers) {
  if (!is_prime(p)) throw ScanError("p must be prime");
  if (h < 1) throw ScanError("h must be positive");
  if (4 * h > Field::kMaxDegree) throw ScanError("field too large");
  std::uint64_t Qbig = 1;
  for (unsigned k = 0; k < 4 * h; ++k) Qbig *= p;
  if (Qbig > Field::kMaxOrder) throw ScanError("field too large");

  const FieldPtr F = create_field(p, 4 * h);
  const std::uint32_t Q = F->order();
  const HermitianCounter counter(F, 1);

  ConjectureReport rep;
  rep.p = p;
  rep.h = h;
  rep.q = 1;
  for (unsigned k = 0; k < 2 * h; ++k) rep.q *= p;

  if (sample == 0) {
    rep.exhaustive = true;
    struct PerA {
      std::map<std::uint32_t, std::uint64_t> hist;
      std::vector<std::array<std::uint32_t, 4>> bad;
    };
    std::vector<PerA> per(Q - 1);
    parallel_for(Q - 1, workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const auto a = static_cast<std::uint32_t>(k + 1);
        for (std::uint32_t m = 0; m < Q; ++m) {
          const auto counts = counter.counts_over_d(Element{a}, Element{m});
          for (std::uint32_t d = 0; d < Q; ++d) {
            ++per[k].hist[counts[d]];
            if (counts[d] % p != 1 % p && per[k].bad.size() < kMaxWitnesses) per[k].bad.push_back({a, m, d, counts[d]});
          }
        }
      }
    });
    for (const auto& pa : per) {
      for (const auto& [c, n] : pa.hist) rep.histogram[c] += n;
      for (const auto& w : pa.bad)
        if (rep.counterexamples.size() < kMaxWitnesses) rep.counterexamples.push_back(w);
    }
    rep.evaluations = std::uint64_t{Q - 1} * Q * Q;
  } else {
    const auto triples = draw_triples(Q, sample, seed, std::nullopt);
    std::vector<std::uint32_t> counts(triples.size());
    parallel_for(triples.size(), workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k)
        counts[k] = counter.count(Element{triples[k].a}, Element{triples[k].m}, Element{triples[k].d});
    });
    for (std::size_t k = 0; k < triples.size(); ++k) {
      ++rep.histogram[counts[k]];
      if (counts[k] % p != 1 % p && rep.counterexamples.size() < kMaxWitnesses)
        rep.counterexamples.push_back({triples[k].a, triples[k].m, triples[k].d, counts[k]});
    }
    rep.evaluations = triples.size();
  }
  rep.holds = std::all_of(rep.histogram.begin(), rep.histogram.end(),
                          [&](const auto& kv) { return kv.first % p == 1 % p; });
  return rep;
}

namespace {

nlohmann::json histogram_json(const std::map<std::uint32_t, std::uint64_t>& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [c, n] : h) j[std::to_string(c)] = n;
  return j;
}

nlohmann::json witnesses_json(const std::vector<std::array<std::uint32_t, 4>>& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : w) j.push_back({{"a", t[0]}, {"m", t[1]}, {"d", t[2]}, {"count", t[3]}});
  return j;
}

}  // namespace

nlohmann::json to_json(const ScanFReport& r, bool with_entries) {
  nlohmann::json j;
  j["q"] = r.q;
  j["scope"] = r.scope;
  j["maps"] = r.entries.size();
  j["unitals"] = r.unitals;
  j["non_unitals"] = r.non_unitals;
  j["min_types_non_unital"] = r.min_types_non_unital ? nlohmann::json(*r.min_types_non_unital) : nlohmann::json(nullptr);
  j["all_regular_pointed"] = r.all_regular_pointed;
  j["claim_holds"] = r.claim_holds;
  if (with_entries) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : r.entries)
      e.push_back({{"f", x.coeffs},
                   {"reduced", x.reduced},
                   {"quadratic_exception", x.quadratic_exception},
                   {"unital", x.unital},
                   {"report", to_json(x.report)}});
    j["entries"] = e;
  }
  return j;
}

nlohmann::json to_json(const HermitianScanReport& r) {
  nlohmann::json j;
  j["q"] = r.q;
  j["exhaustive"] = r.exhaustive;
  j["evaluations"] = r.evaluations;
  j["allowed"] = r.allowed;
  j["histogram"] = histogram_json(r.histogram);
  j["all_allowed"] = r.all_allowed;
  j["m_independent"] = r.m_independent ? nlohmann::json(*r.m_independent) : nlohmann::json(nullptr);
  j["outliers"] = witnesses_json(r.outliers);
  return j;
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["h"] = r.h;
  j["q"] = r.q;
  j["exhaustive"] = r.exhaustive;
  j["evaluations"] = r.evaluations;
  j["histogram"] = histogram_json(r.histogram);
  j["counterexamples"] = witnesses_json(r.counterexamples);
  j["holds"] = r.holds;
  return j;
}

}  // namespace regset
