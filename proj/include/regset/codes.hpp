#pragma once

// Projective linear codes of point sets.
//
// The code C(X) has a 3 x |X| generator matrix whose columns are the
// normalized coordinates of the members of X in ascending index order. A
// nonzero message u gives the codeword (u . P)_{P ∈ X}; it vanishes exactly
// on the points of the line u, so its weight is |X| - |X ∩ u|. Summing over
// all messages yields the geometric weight enumerator
//
//   A_0 = 1,  A_{|X| - i} += (Q - 1) e_i.
//
// weights_exhaustive() walks all Q^3 messages instead and serves as the
// independent oracle for that identity.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "regset/classify.hpp"
#include "regset/plane.hpp"

namespace regset {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorMatrix {
  FieldPtr field;
  std::array<std::vector<Element>, 3> rows;
  std::size_t cols() const { return rows[0].size(); }
};

/// Throws CodeError when |X| < 3 or X does not span the plane.
GeneratorMatrix code_from_set(const PointSet& X);
/// Rank over the field of the given rows.
unsigned matrix_rank(const Field& F, std::vector<std::vector<Element>> rows);

/// Text export: "p n c_0 .. c_n Q rows cols", then one row of element indices per line.
void write_generator_matrix(std::ostream& os, const GeneratorMatrix& G);

struct WeightEnumerator {
  std::map<std::uint64_t, std::uint64_t> coeffs;  // weight -> number of messages
  std::uint64_t length = 0;
  std::uint32_t field_order = 0;

  std::uint64_t total() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator weights_from_enumerator(const PointSet& X, const IntersectionEnumerator& E);

/// Largest Q^3 accepted by weights_exhaustive.
inline constexpr std::uint64_t kMaxExhaustiveMessages = std::uint64_t{1} << 24;
/// Throws CodeError when Q^3 > 2^24.
WeightEnumerator weights_exhaustive(const GeneratorMatrix& G, unsigned workers = 1);

/// gcd of the nonzero weights that occur.
std::uint64_t divisibility(const WeightEnumerator& W);

/// Coefficients reduced mod M; zero residues are dropped.
std::map<std::uint64_t, std::uint64_t> reduce_mod(const WeightEnumerator& W, std::uint64_t M);

/// Renders a residue polynomial, e.g. "1 + 648x^720 + 80x^729". With
/// `signed_form` residues above M/2 are shown as negative numbers.
std::string render_residues(const std::map<std::uint64_t, std::uint64_t>& r, std::uint64_t M, bool signed_form);

/// Minimum distance of the dual code read off the geometry: columns are
/// distinct projective points, so 3 when some line holds 3 points, else 4
/// (or larger for tiny n).
unsigned dual_distance_geometric(const IntersectionEnumerator& E);
/// Smallest number of linearly dependent columns, found by subset search up
/// to size 4. Intended for small codes.
unsigned dual_distance_exhaustive(const GeneratorMatrix& G);

struct CodeReport {
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint64_t d_min = 0;
  std::vector<std::uint64_t> weight_list;  // nonzero weights, ascending
  std::uint64_t divisor = 0;
  std::uint64_t dual_n = 0;
  std::uint64_t dual_k = 0;
  unsigned dual_distance = 0;
  std::string dual_distance_method;
  WeightEnumerator weights;
};

/// Report built from the geometric route; the dual distance is searched
/// exhaustively for Q <= 9 and read from the geometry otherwise.
CodeReport code_report(const PointSet& X, const IntersectionEnumerator& E);

/// Congruence checklists on the intersection enumerator.
struct FamilyTag {
  enum class Kind { RegularPointed, TraceNorm, Lift };
  Kind kind = Kind::RegularPointed;
  std::uint64_t q = 0;  // base field order
  unsigned h = 1;       // plane order is q^h
  unsigned s = 0;       // lift only
  std::uint64_t t = 0;  // lift only: pointed parameter of the input set
};

struct CongruenceCheck {
  std::string statement;
  std::uint32_t i = 0;
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;  // 0 means exact equality
  std::uint64_t expected = 0;
  bool pass = false;
};

struct DivisibilityReport {
  std::vector<CongruenceCheck> checks;
  bool all_pass() const;
};

DivisibilityReport enumerator_divisibility_check(const IntersectionEnumerator& E, const FamilyTag& tag);
FamilyTag parse_family_tag(const std::string& name, std::uint64_t q, unsigned h, unsigned s, std::uint64_t t);

/// Expected residues of the weight enumerator for each family.
std::map<std::uint64_t, std::uint64_t> expected_reduction(const FamilyTag& tag, std::uint64_t set_size);
std::uint64_t reduction_modulus(const FamilyTag& tag);

std::uint64_t ipow(std::uint64_t b, unsigned e);

nlohmann::json to_json(const WeightEnumerator& W);
nlohmann::json to_json(const CodeReport& r);
nlohmann::json to_json(const DivisibilityReport& r);

}  // namespace regset
