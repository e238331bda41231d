#pragma once

// Parameter-space scans: additive maps f for trace-norm sets, Hermitian
// intersection counts over curve families, and the odd-count test for
// y = a x^p + m x + d.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "regset/classify.hpp"
#include "regset/galois.hpp"

namespace regset {

class ScanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScanFEntry {
  std::vector<std::uint32_t> coeffs;  // f = sum coeffs[j] x^(p^j)
  /// Equivalent map modulo the trace: Tr(c x^(p^(j+e))) = Tr(c^q x^(p^j)) for
  /// q = p^e, so only the first e coefficients remain.
  std::vector<std::uint32_t> reduced;
  /// q even and the reduced map is a x^2 + b x with a != 0.
  bool quadratic_exception = false;
  bool unital = false;
  TypeReport report;
};

struct ScanFReport {
  std::uint64_t q = 0;
  std::string scope;  // "full" or "monomial-binomial"
  std::vector<ScanFEntry> entries;
  std::uint64_t unitals = 0;
  std::uint64_t non_unitals = 0;
  /// Fewest affine types among the non-unital entries.
  std::optional<std::size_t> min_types_non_unital;
  bool all_regular_pointed = false;
  /// Every non-unital outside the quadratic exception has at least 4 affine types.
  bool claim_holds = false;
};

/// q ∈ {2, 3}: every additive f over GF(q^2); q = 4: maps with at most two
/// nonzero coefficients. Throws ScanError for other q.
ScanFReport scan_f(std::uint64_t q, unsigned workers = 1);

struct HermitianScanReport {
  std::uint64_t q = 0;
  bool exhaustive = false;
  std::uint64_t evaluations = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;  // count -> occurrences
  std::vector<std::uint32_t> allowed;
  bool all_allowed = false;
  /// Exhaustive runs only: for each a, the multiset over d does not depend on m.
  std::optional<bool> m_independent;
  /// Witnesses (a, m, d, count) outside the allowed list, at most 10.
  std::vector<std::array<std::uint32_t, 4>> outliers;
};

/// Counts |H ∩ C(a, m, d)| for y = a x^sqrt(q) + m x + d over GF(q^2), q a
/// square. sample = 0 walks every a != 0, m, d; otherwise `sample` seeded
/// triples are drawn. Restricting to a single a is possible with `only_a`.
HermitianScanReport hermitian_scan(std::uint64_t q, std::uint64_t sample, std::uint64_t seed,
                                   std::optional<std::uint32_t> only_a = std::nullopt, unsigned workers = 1);

struct ConjectureReport {
  unsigned p = 0;
  unsigned h = 0;
  std::uint64_t q = 0;  // p^(2h); the plane is over GF(q^2)
  bool exhaustive = false;
  std::uint64_t evaluations = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::vector<std::array<std::uint32_t, 4>> counterexamples;  // (a, m, d, count), at most 10
  bool holds = false;
};

/// Affine points of y^q + y = x^(q+1) on y = a x^p + m x + d, checked
/// against count ≡ 1 (mod p). sample = 0 means exhaustive.
ConjectureReport conjecture(unsigned p, unsigned h, std::uint64_t sample, std::uint64_t seed,
                            unsigned workers = 1);

nlohmann::json to_json(const ScanFReport& r, bool with_entries = true);
nlohmann::json to_json(const HermitianScanReport& r);
nlohmann::json to_json(const ConjectureReport& r);

}  // namespace regset
