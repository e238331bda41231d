#pragma once

// Verification suites. Each suite rebuilds the relevant families, classifies
// them and compares against closed-form expectations; the report pairs every
// expected value with the computed one.
//
// Suites: thm12, remark35, thm13, example26, touching, lift, codes,
// properties, all.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "regset/classify.hpp"

namespace regset {

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  /// Informational checks are reported but do not fail the suite.
  bool required = true;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  /// Restrict the suite to one q; otherwise each suite uses its default list.
  std::optional<std::uint64_t> q;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Sampled a values for gamma families with q^2 > 81.
  std::uint64_t sample = 20;
};

const std::vector<std::string>& suite_names();

/// Throws VerifyError for an unknown suite or a q the suite cannot handle.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const SuiteReport& r);

// Building blocks shared with the acceptance harness.

/// {q - 2r + 1, q - r + 1, q + 1, q + r + 1} with r = sqrt(q).
std::vector<std::uint32_t> gamma_types(std::uint64_t q);

/// Nonzero element indices of GF(q^2): all of them when q^2 <= 81, else
/// `count` distinct seeded draws in ascending order.
std::vector<std::uint32_t> gamma_sample(std::uint64_t q, std::uint64_t count, std::uint64_t seed);

/// Per-slope counts of (q+r+1, q+1, q-r+1, q-2r+1)-secants; nullopt when
/// non-vertical slopes disagree.
std::optional<std::array<std::uint64_t, 4>> slope_profile(const IntersectionEnumerator& E, std::uint64_t q);

/// Tabulated per-slope tuples for q ∈ {4, 9, 16, 25}.
std::vector<std::array<std::uint64_t, 4>> remark35_table(std::uint64_t q);

struct PointedParams {
  std::uint32_t t = 0;
  std::vector<std::uint32_t> types;  // sorted, distinct
};

/// Closed-form parameters of the oval-derived sets, variant 1..4, q odd.
PointedParams oval_expected(std::uint64_t q, int variant);

/// "[t; m1,m2,...]".
std::string pointed_signature(const TypeReport& r);

}  // namespace regset
