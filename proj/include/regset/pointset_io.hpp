#pragma once

// PointSet serialization.
//
// Text form (line oriented):
//
//   regset-pointset 1
//   p n c_0 ... c_n Q label text
//   <member index>
//   ...
//
// Member indices are strictly ascending. The JSON form carries the same
// fields: {"format", "version", "p", "n", "modulus", "Q", "label", "members"}.
// Readers rebuild the field with create_field(p, n) and reject files whose
// modulus differs from the deterministic one.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "regset/plane.hpp"
#include "json.hpp"

namespace regset {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_pointset(std::ostream& os, const PointSet& X);
PointSet read_pointset(std::istream& is);

nlohmann::json pointset_to_json(const PointSet& X);
PointSet pointset_from_json(const nlohmann::json& j);

/// Reads either format, picked by the first non-blank character.
PointSet load_pointset(const std::string& path);
void save_pointset(const std::string& path, const PointSet& X, bool as_json);

}  // namespace regset
