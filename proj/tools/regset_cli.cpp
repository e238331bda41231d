// regset: construct, classify and verify regular point sets of PG(2, Q).
//
// Every subcommand prints one JSON document. Exit status: 0 pass, 1 a check
// failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regset/classify.hpp"
#include "regset/codes.hpp"
#include "regset/families.hpp"
#include "regset/pointset_io.hpp"
#include "regset/scans.hpp"
#include "regset/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Args {
  std::uint64_t q = 0;
  std::uint32_t a = 1;
  std::optional<std::uint32_t> scan_a;
  std::string family;
  std::vector<std::uint32_t> B;
  std::vector<std::uint32_t> f;
  unsigned s = 2;
  unsigned h = 2;
  unsigned p = 2;
  std::string base = "oval1";
  std::string in;
  std::string suite;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out;
  bool auto_frames = false;
  bool directions = false;
  bool exhaustive = false;
  bool entries = false;
  std::string matrix;
  std::string tag;
  bool json_set = false;
};

void emit(const nlohmann::json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream os(out);
  if (!os) throw std::invalid_argument("cannot write " + out);
  os << j.dump(2) << '\n';
}

regset::FamilySpec spec_from(const Args& a) {
  regset::FamilySpec s;
  s.family = a.family;
  s.q = a.q;
  s.a = a.a;
  s.B = a.B;
  s.s = a.s;
  s.h = a.h;
  s.f = a.f;
  s.base = a.base;
  return s;
}

regset::PointSet input_set(const Args& a) {
  if (!a.in.empty()) return regset::load_pointset(a.in);
  if (a.family.empty()) throw std::invalid_argument("give --family or --in");
  return regset::build_family(spec_from(a));
}

void add_family_options(CLI::App* sub, Args& a) {
  sub->add_option("--family", a.family, "point-set family");
  sub->add_option("--q", a.q, "field order q");
  sub->add_option("--a", a.a, "element index a");
  sub->add_option("--B", a.B, "comma list of element indices")->delimiter(',');
  sub->add_option("--f", a.f, "comma list of additive map coefficients")->delimiter(',');
  sub->add_option("--s", a.s, "exponent s (touching) or subspace dimension (lift)");
  sub->add_option("--h", a.h, "extension degree of the lift");
  sub->add_option("--base", a.base, "base family for lift and complement");
  sub->add_option("--in", a.in, "read the point set from a file");
}

int run(const std::string& cmd, const Args& a) {
  using namespace regset;
  if (cmd == "construct") {
    const PointSet X = input_set(a);
    if (!a.out.empty()) save_pointset(a.out, X, a.json_set || a.out.ends_with(".json"));
    emit({{"label", X.label()}, {"Q", X.plane().order()}, {"size", X.size()}, {"written", a.out}}, "");
    return kPass;
  }
  if (cmd == "classify") {
    const PointSet X = input_set(a);
    const IntersectionEnumerator E = enumerate(X, a.workers);
    nlohmann::json j;
    j["label"] = X.label();
    j["size"] = X.size();
    j["unital"] = is_unital(X, E);
    if (a.auto_frames) {
      nlohmann::json frames = nlohmann::json::array();
      for (const auto& r : auto_classify(X, E)) frames.push_back(to_json(r));
      j["frames"] = frames;
    } else {
      const TypeReport r = classify(X, E, standard_frame(X.plane()));
      j["report"] = to_json(r);
      j["signature"] = pointed_signature(r);
    }
    emit(j, a.out);
    return kPass;
  }
  if (cmd == "spectrum") {
    const PointSet X = input_set(a);
    const IntersectionEnumerator E = enumerate(X, a.workers);
    const auto dc = check_double_counting(E);
    nlohmann::json j = to_json(E, a.directions);
    j["label"] = X.label();
    j["double_counting"] = dc.ok();
    emit(j, a.out);
    return dc.ok() ? kPass : kMismatch;
  }
  if (cmd == "code") {
    const PointSet X = input_set(a);
    const IntersectionEnumerator E = enumerate(X, a.workers);
    const CodeReport cr = code_report(X, E);
    nlohmann::json j = to_json(cr);
    j["label"] = X.label();
    bool ok = true;
    if (a.exhaustive) {
      const WeightEnumerator W = weights_exhaustive(code_from_set(X), a.workers);
      j["exhaustive_agrees"] = W == cr.weights;
      ok = ok && W == cr.weights;
    }
    std::optional<FamilyTag> tag;
    if (!a.tag.empty()) {
      tag = parse_family_tag(a.tag, a.q, a.h, a.s, 0);
      if (tag->kind == FamilyTag::Kind::Lift) tag = family_tag(spec_from(a));
    } else if (!a.family.empty()) {
      tag = family_tag(spec_from(a));
    }
    if (tag) {
      const DivisibilityReport div = enumerator_divisibility_check(E, *tag);
      const std::uint64_t M = reduction_modulus(*tag);
      const auto got = reduce_mod(cr.weights, M);
      const auto want = expected_reduction(*tag, X.size());
      j["congruences"] = to_json(div);
      j["reduction"] = {{"modulus", M},
                        {"computed", render_residues(got, M, false)},
                        {"expected", render_residues(want, M, false)},
                        {"match", got == want}};
      ok = ok && div.all_pass() && got == want;
    }
    if (!a.matrix.empty()) {
      std::ofstream os(a.matrix);
      if (!os) throw std::invalid_argument("cannot write " + a.matrix);
      write_generator_matrix(os, code_from_set(X));
    }
    emit(j, a.out);
    return ok ? kPass : kMismatch;
  }
  if (cmd == "hermitian-scan") {
    if (a.q == 0) throw std::invalid_argument("--q is required");
    const auto rep = hermitian_scan(a.q, a.sample, a.seed, a.scan_a, a.workers);
    emit(to_json(rep), a.out);
    return rep.all_allowed ? kPass : kMismatch;
  }
  if (cmd == "verify") {
    VerifyOptions opt;
    if (a.q != 0) opt.q = a.q;
    opt.seed = a.seed;
    opt.workers = a.workers;
    if (a.sample != 0) opt.sample = a.sample;
    const SuiteReport r = run_suite(a.suite, opt);
    emit(to_json(r), a.out);
    return r.pass() ? kPass : kMismatch;
  }
  if (cmd == "scan-f") {
    if (a.q == 0) throw std::invalid_argument("--q is required");
    const ScanFReport r = scan_f(a.q, a.workers);
    emit(to_json(r, a.entries), a.out);
    return r.claim_holds && r.all_regular_pointed ? kPass : kMismatch;
  }
  if (cmd == "conjecture") {
    const ConjectureReport r = conjecture(a.p, a.h, a.sample, a.seed, a.workers);
    emit(to_json(r), a.out);
    if (!r.holds)
      for (const auto& w : r.counterexamples)
        std::cerr << "counterexample: a=" << w[0] << " m=" << w[1] << " d=" << w[2] << " count=" << w[3] << '\n';
    return r.holds ? kPass : kMismatch;
  }
  throw std::invalid_argument("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regset: regular point sets of PG(2, Q) and their codes"};
  app.require_subcommand(1);
  Args a;
  // --h is the lift degree, so help is long-form only.
  app.set_help_flag("--help", "print help");
  const auto subcommand = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  auto* construct = subcommand("construct", "build a point set and optionally write it");
  add_family_options(construct, a);
  construct->add_option("--out", a.out, "point-set file (.json for JSON)");
  construct->add_flag("--json", a.json_set, "write JSON regardless of extension");

  auto* cls = subcommand("classify", "type report at ((inf), l_inf)");
  add_family_options(cls, a);
  cls->add_flag("--auto", a.auto_frames, "report every frame (P0, tangent)");

  auto* spectrum = subcommand("spectrum", "intersection enumerator");
  add_family_options(spectrum, a);
  spectrum->add_flag("--directions", a.directions, "include per-direction multisets");

  auto* code = subcommand("code", "projective code of the set");
  add_family_options(code, a);
  code->add_flag("--exhaustive", a.exhaustive, "cross-check by enumerating all messages");
  code->add_option("--tag", a.tag, "family tag: regular-pointed, trace-norm or lift");
  code->add_option("--matrix", a.matrix, "write the generator matrix to this file");

  auto* hscan = subcommand("hermitian-scan", "Hermitian intersections with y = a x^sqrt(q) + m x + d");
  hscan->add_option("--q", a.q, "q, a square")->required();
  hscan->add_option("--a", a.scan_a, "restrict to this a");

  auto* verify = subcommand("verify", "run a verification suite");
  verify->add_option("--suite", a.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(regset::suite_names()));
  verify->add_option("--q", a.q, "restrict to one q");

  auto* scanf = subcommand("scan-f", "classify trace-norm sets over additive maps");
  scanf->add_option("--q", a.q, "q in {2, 3, 4}")->required();
  scanf->add_flag("--entries", a.entries, "include every scanned map");

  auto* conj = subcommand("conjecture", "count parity test for y = a x^p + m x + d");
  conj->add_option("--p", a.p, "characteristic");
  conj->add_option("--h", a.h, "q = p^(2h)");

  for (auto* sub : {construct, cls, spectrum, code, hscan, verify, scanf, conj}) {
    sub->add_option("--workers", a.workers, "worker threads, 0 = all cores");
    if (sub != construct) sub->add_option("--out", a.out, "write the JSON report here");
    if (sub == hscan || sub == verify || sub == conj) {
      sub->add_option("--sample", a.sample, "sample size, 0 = exhaustive");
      sub->add_option("--seed", a.seed, "seed for sampled runs");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, a);
  } catch (const std::exception& e) {
    std::cerr << "regset " << cmd << ": " << e.what() << '\n';
    return kUsage;
  }
}
