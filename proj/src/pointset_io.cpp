#include "regset/pointset_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace regset {

namespace {

constexpr const char* kMagic = "regset-pointset";
constexpr int kVersion = 1;

PlanePtr plane_for(unsigned p, unsigned n, const std::vector<std::uint32_t>& modulus, std::uint64_t Q) {
  FieldPtr F;
  try {
    F = create_field(p, n);
  } catch (const FieldError& e) {
    throw FormatError(std::string("bad field header: ") + e.what());
  }
  if (F->order() != Q) throw FormatError("field order does not match p^n");
  const auto mod = F->modulus();
  if (modulus.size() != mod.size() || !std::equal(mod.begin(), mod.end(), modulus.begin()))
    throw FormatError("modulus differs from the canonical primitive polynomial");
  return Plane::create(F);
}

void insert_members(PointSet& X, const std::vector<std::uint64_t>& idx) {
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t i : idx) {
    if (i >= X.plane().size()) throw FormatError("member index out of range");
    if (!first && i <= prev) throw FormatError("member indices must be strictly ascending");
    X.insert(static_cast<std::uint32_t>(i));
    prev = i;
    first = false;
  }
}

}  // namespace

void write_pointset(std::ostream& os, const PointSet& X) {
  const Field& F = X.field();
  os << kMagic << ' ' << kVersion << '\n';
  os << F.characteristic() << ' ' << F.degree();
  for (std::uint32_t c : F.modulus()) os << ' ' << c;
  os << ' ' << F.order() << ' ' << X.label() << '\n';
  for (std::uint32_t i : X.members()) os << i << '\n';
}

PointSet read_pointset(std::istream& is) {
  std::string magic;
  int version = 0;
  if (!(is >> magic >> version) || magic != kMagic) throw FormatError("missing regset-pointset header");
  if (version != kVersion) throw FormatError("unsupported point set version " + std::to_string(version));
  std::string header;
  std::getline(is, header);  // rest of the magic line
  if (!std::getline(is, header)) throw FormatError("missing field header");
  std::istringstream hs(header);
  unsigned p = 0, n = 0;
  if (!(hs >> p >> n)) throw FormatError("malformed field header");
  std::vector<std::uint32_t> modulus(n + 1);
  for (auto& c : modulus)
    if (!(hs >> c)) throw FormatError("malformed modulus");
  std::uint64_t Q = 0;
  if (!(hs >> Q)) throw FormatError("missing field order");
  std::string label;
  std::getline(hs, label);
  if (!label.empty() && label.front() == ' ') label.erase(0, 1);

  PointSet X(plane_for(p, n, modulus, Q), label);
  std::vector<std::uint64_t> idx;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::uint64_t v = 0;
    if (!(ls >> v)) throw FormatError("malformed member line: " + line);
    idx.push_back(v);
  }
  insert_members(X, idx);
  return X;
}

nlohmann::json pointset_to_json(const PointSet& X) {
  const Field& F = X.field();
  nlohmann::json j;
  j["format"] = kMagic;
  j["version"] = kVersion;
  j["p"] = F.characteristic();
  j["n"] = F.degree();
  j["modulus"] = std::vector<std::uint32_t>(F.modulus().begin(), F.modulus().end());
  j["Q"] = F.order();
  j["label"] = X.label();
  j["members"] = X.members();
  return j;
}

PointSet pointset_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kMagic) throw FormatError("not a regset point set");
    if (j.at("version").get<int>() != kVersion) throw FormatError("unsupported point set version");
    PointSet X(plane_for(j.at("p").get<unsigned>(), j.at("n").get<unsigned>(),
                         j.at("modulus").get<std::vector<std::uint32_t>>(), j.at("Q").get<std::uint64_t>()),
               j.value("label", std::string{}));
    insert_members(X, j.at("members").get<std::vector<std::uint64_t>>());
    return X;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed point set JSON: ") + e.what());
  }
}

PointSet load_pointset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  in >> std::ws;
  if (in.peek() == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    return pointset_from_json(j);
  }
  return read_pointset(in);
}

void save_pointset(const std::string& path, const PointSet& X, bool as_json) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  if (as_json) {
    out << pointset_to_json(X).dump(1) << '\n';
  } else {
    write_pointset(out, X);
  }
}

}  // namespace regset
