#include "regset/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "regset/census.hpp"
#include "regset/codes.hpp"
#include "regset/constructions.hpp"
#include "regset/families.hpp"
#include "regset/scans.hpp"

namespace regset {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.required && !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm12", "remark35", "thm13",      "example26", "touching",
                                              "lift",  "codes",    "properties", "all"};
  return names;
}

std::vector<std::uint32_t> gamma_types(std::uint64_t q) {
  const auto r = exact_sqrt(q);
  if (!r) throw VerifyError("q must be a square");
  return {static_cast<std::uint32_t>(q - 2 * *r + 1), static_cast<std::uint32_t>(q - *r + 1),
          static_cast<std::uint32_t>(q + 1), static_cast<std::uint32_t>(q + *r + 1)};
}

std::vector<std::uint32_t> gamma_sample(std::uint64_t q, std::uint64_t count, std::uint64_t seed) {
  const std::uint64_t Q = q * q;
  std::vector<std::uint32_t> out;
  if (Q <= 81 || count >= Q - 1) {
    for (std::uint32_t a = 1; a < Q; ++a) out.push_back(a);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint32_t> picked;
  while (picked.size() < count) picked.insert(static_cast<std::uint32_t>(1 + rng() % (Q - 1)));
  return {picked.begin(), picked.end()};
}

std::optional<std::array<std::uint64_t, 4>> slope_profile(const IntersectionEnumerator& E, std::uint64_t q) {
  auto types = gamma_types(q);
  std::reverse(types.begin(), types.end());
  std::optional<std::array<std::uint64_t, 4>> common;
  for (std::uint32_t m = 0; m < E.plane_order; ++m) {
    std::array<std::uint64_t, 4> tuple{};
    for (std::uint32_t k : E.by_direction[m])
      for (std::size_t j = 0; j < 4; ++j)
        if (k == types[j]) ++tuple[j];
    if (!common) {
      common = tuple;
    } else if (*common != tuple) {
      return std::nullopt;
    }
  }
  return common;
}

std::vector<std::array<std::uint64_t, 4>> remark35_table(std::uint64_t q) {
  switch (q) {
    case 4: return {{0, 12, 0, 4}, {4, 0, 12, 0}};
    case 9: return {{18, 27, 27, 9}};
    case 16: return {{64, 96, 64, 32}};
    case 25: return {{150, 300, 75, 100}, {175, 225, 150, 75}};
    default: throw VerifyError("no tabulated per-slope counts for q = " + std::to_string(q));
  }
}

PointedParams oval_expected(std::uint64_t q, int variant) {
  if (q % 2 == 0) throw VerifyError("oval sets need q odd");
  const auto h = [&](std::int64_t v) { return static_cast<std::uint32_t>(v); };
  const std::int64_t Q = static_cast<std::int64_t>(q);
  PointedParams p;
  switch (variant) {
    case 1: p = {h((Q - 1) / 2), {0, h((Q - 1) / 2), h((Q + 1) / 2)}}; break;
    case 2: p = {h((Q - 1) / 2), {h(Q - 1), h((Q - 3) / 2), h((Q - 1) / 2)}}; break;
    case 3: p = {h((Q + 1) / 2), {1, h((Q + 3) / 2), h((Q + 1) / 2)}}; break;
    case 4: p = {h((Q + 1) / 2), {h(Q), h((Q + 1) / 2), h((Q - 1) / 2)}}; break;
    default: throw VerifyError("oval variant must be 1..4");
  }
  std::sort(p.types.begin(), p.types.end());
  p.types.erase(std::unique(p.types.begin(), p.types.end()), p.types.end());
  return p;
}

std::string pointed_signature(const TypeReport& r) {
  std::ostringstream os;
  os << '[';
  if (r.t) {
    os << *r.t;
  } else {
    os << '-';
  }
  os << ';';
  for (std::size_t i = 0; i < r.affine_types.size(); ++i) os << (i ? "," : " ") << r.affine_types[i];
  os << ']';
  return os.str();
}

namespace {

std::string sig(std::uint32_t t, const std::vector<std::uint32_t>& types) {
  TypeReport r;
  r.t = t;
  r.affine_types = types;
  return pointed_signature(r);
}

nlohmann::json residues_json(const std::map<std::uint64_t, std::uint64_t>& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, a] : r) j[std::to_string(w)] = a;
  return j;
}

nlohmann::json tuple_json(const std::array<std::uint64_t, 4>& t) { return nlohmann::json(t); }

class Ctx {
 public:
  Ctx(std::string suite, const VerifyOptions& opt) : opt(opt) { report.suite = std::move(suite); }

  const VerifyOptions& opt;
  SuiteReport report;

  IntersectionEnumerator enumerate_checked(const PointSet& X) {
    IntersectionEnumerator E = enumerate(X, opt.workers);
    ++enumerators_;
    if (!check_double_counting(E).ok()) {
      ++bad_count_;
      if (bad_.size() < 10) bad_.push_back(X.label());
    }
    return E;
  }

  void add(std::string name, nlohmann::json expected, nlohmann::json computed, bool pass, bool required = true) {
    report.checks.push_back({std::move(name), std::move(expected), std::move(computed), pass, required});
  }

  SuiteReport finish() {
    add(report.suite + ": double counting identities", {{"failures", 0}},
        {{"enumerators", enumerators_}, {"failures", bad_count_}, {"labels", bad_}}, bad_count_ == 0);
    return std::move(report);
  }

 private:
  std::uint64_t enumerators_ = 0;
  std::uint64_t bad_count_ = 0;
  std::vector<std::string> bad_;
};

std::vector<std::uint64_t> qs_or(const VerifyOptions& opt, std::vector<std::uint64_t> defaults) {
  if (opt.q) return {*opt.q};
  return defaults;
}

FamilySpec spec_of(std::string family, std::uint64_t q) {
  FamilySpec s;
  s.family = std::move(family);
  s.q = q;
  return s;
}

PointSet gamma_set(std::uint64_t q, std::uint32_t a) {
  FamilySpec s = spec_of("gamma", q);
  s.a = a;
  return build_family(s);
}

// ---------------------------------------------------------------- thm12

void suite_thm12(Ctx& ctx, std::uint64_t q) {
  const auto allowed = gamma_types(q);
  const std::uint64_t r = *exact_sqrt(q);
  const auto as = gamma_sample(q, ctx.opt.sample, ctx.opt.seed);
  std::map<std::string, std::uint64_t> seen;
  std::vector<std::uint32_t> failures;
  for (std::uint32_t a : as) {
    const PointSet X = gamma_set(q, a);
    const IntersectionEnumerator E = ctx.enumerate_checked(X);
    const TypeReport rep = classify(X, E, standard_frame(X.plane()));
    ++seen[pointed_signature(rep)];
    bool ok = rep.is_regular_pointed && rep.t == q && types_within(rep, allowed);
    for (std::uint32_t m : rep.affine_types) ok = ok && m % r == 1 % r;
    if (!ok) failures.push_back(a);
  }
  ctx.add("thm12 q=" + std::to_string(q) + ": gamma_a regular pointed",
          {{"signature", sig(static_cast<std::uint32_t>(q), allowed)},
           {"t", q},
           {"types_within", allowed},
           {"types_mod_sqrt_q", 1 % r}},
          {{"a_checked", as.size()}, {"signatures", seen}, {"failing_a", failures}}, failures.empty());
}

// ---------------------------------------------------------------- remark35

void suite_remark35(Ctx& ctx, std::uint64_t q) {
  const auto table = remark35_table(q);
  const std::uint64_t Q = q * q;
  std::map<std::array<std::uint64_t, 4>, std::uint64_t> seen;
  std::vector<std::uint32_t> irregular;
  for (std::uint32_t a = 1; a < Q; ++a) {
    const PointSet X = gamma_set(q, a);
    const IntersectionEnumerator E = ctx.enumerate_checked(X);
    const auto prof = slope_profile(E, q);
    if (!prof) {
      irregular.push_back(a);
      continue;
    }
    ++seen[*prof];
  }
  nlohmann::json computed = nlohmann::json::array();
  bool within = irregular.empty();
  for (const auto& [t, n] : seen) {
    computed.push_back({{"counts", tuple_json(t)}, {"a_values", n}});
    if (std::find(table.begin(), table.end(), t) == table.end()) within = false;
  }
  nlohmann::json expected = nlohmann::json::array();
  for (const auto& t : table) expected.push_back(tuple_json(t));
  ctx.add("remark35 q=" + std::to_string(q) + ": per-slope counts of (" + nlohmann::json(gamma_types(q)).dump() +
              " reversed)-secants lie in the table",
          {{"table", expected}}, {{"classes", computed}, {"irregular_a", irregular}}, within);
  bool realized = true;
  for (const auto& t : table) realized = realized && seen.count(t) > 0;
  ctx.add("remark35 q=" + std::to_string(q) + ": every tabulated class is realized over all a",
          {{"table", expected}}, {{"realized", seen.size()}}, realized);
}

// ---------------------------------------------------------------- thm13

void suite_thm13(Ctx& ctx, std::uint64_t q) {
  const std::uint64_t Q = q * q;
  const std::uint64_t sample = Q <= 81 ? 0 : 10000;
  const HermitianScanReport rep = hermitian_scan(q, sample, ctx.opt.seed, std::nullopt, ctx.opt.workers);
  ctx.add("thm13 q=" + std::to_string(q) + ": |H ∩ C(a,m,d)| in the four-value list",
          {{"allowed", rep.allowed}, {"mode", sample == 0 ? "exhaustive" : "sampled"}}, to_json(rep),
          rep.all_allowed);
  if (rep.m_independent)
    ctx.add("thm13 q=" + std::to_string(q) + ": multiset over d independent of m", true, *rep.m_independent,
            *rep.m_independent);

  // Direct evaluation against the histogram route on seeded triples.
  const FieldPtr F = field_of_order(Q);
  const HermitianCounter counter(F, F->degree() / 4);
  std::mt19937_64 rng(ctx.opt.seed);
  std::uint64_t mismatches = 0;
  for (int k = 0; k < 200; ++k) {
    const Element a{static_cast<std::uint32_t>(1 + rng() % (Q - 1))};
    const Element m{static_cast<std::uint32_t>(rng() % Q)};
    const Element d{static_cast<std::uint32_t>(rng() % Q)};
    const auto over_d = counter.counts_over_d(a, m);
    if (over_d[d.index] != hermitian_intersection_count(*F, {a, m, d})) ++mismatches;
  }
  ctx.add("thm13 q=" + std::to_string(q) + ": direct count agrees with the trace-histogram count", 0, mismatches,
          mismatches == 0);
}

// ---------------------------------------------------------------- example26

void suite_example26(Ctx& ctx, std::uint64_t q) {
  for (int v = 1; v <= 4; ++v) {
    const PointSet X = build_family(spec_of("oval" + std::to_string(v), q));
    const IntersectionEnumerator E = ctx.enumerate_checked(X);
    const TypeReport rep = classify(X, E, standard_frame(X.plane()));
    const PointedParams want = oval_expected(q, v);
    const bool ok = rep.is_regular_pointed && rep.t == want.t && rep.affine_types == want.types;
    ctx.add("example26 q=" + std::to_string(q) + " variant " + std::to_string(v),
            {{"signature", sig(want.t, want.types)}, {"regular_pointed", true}},
            {{"signature", pointed_signature(rep)}, {"regular_pointed", rep.is_regular_pointed}, {"size", X.size()}},
            ok);
  }
}

// ---------------------------------------------------------------- touching

void suite_touching(Ctx& ctx, std::uint64_t q) {
  if (q % 2 == 0) throw VerifyError("touching suite needs q odd");
  const PlanePtr P = plane_of_order(q);
  for (unsigned s = 2; s < q; s += 2) {
    if ((q - 1) % s != 0) continue;
    FamilySpec spec = spec_of("touching", q);
    spec.s = s;
    const PointSet X = build_family(spec);
    const IntersectionEnumerator E = ctx.enumerate_checked(X);
    const TypeReport rep = classify(X, E, standard_frame(*P));
    const auto t = static_cast<std::uint32_t>((q - 1) / s + 1);
    const bool has_one = std::find(rep.affine_types.begin(), rep.affine_types.end(), 1u) != rep.affine_types.end();
    const std::string name = "touching q=" + std::to_string(q) + " s=" + std::to_string(s);
    ctx.add(name + ": B = {v u^s}, pointed with t = (q-1)/s + 1 and 1 among the types",
            {{"t", t}, {"has_type_1", true}, {"regular_pointed", true}},
            {{"signature", pointed_signature(rep)}, {"regular_pointed", rep.is_regular_pointed}},
            rep.is_regular_pointed && rep.t == t && has_one);
    ctx.add(name + ": number of affine types", s + 1, rep.affine_types.size(), rep.affine_types.size() == s + 1,
            false);
  }
  // Arbitrary B: the union is always regular of pointed type.
  std::mt19937_64 rng(ctx.opt.seed + q);
  std::uint64_t bad = 0;
  nlohmann::json samples = nlohmann::json::array();
  for (int k = 0; k < 5; ++k) {
    std::vector<Element> B;
    for (std::uint32_t b = 0; b < q; ++b)
      if (rng() % 2) B.push_back(Element{b});
    if (B.empty()) B.push_back(Element{0});
    const PointSet X = touching_union(P, B);
    const TypeReport rep = classify(X, ctx.enumerate_checked(X), standard_frame(*P));
    const bool ok = rep.is_regular_pointed && rep.t == B.size();
    if (!ok) ++bad;
    std::vector<std::uint32_t> idx;
    for (Element b : B) idx.push_back(b.index);
    samples.push_back({{"B", idx}, {"signature", pointed_signature(rep)}, {"regular_pointed", rep.is_regular_pointed}});
  }
  ctx.add("touching q=" + std::to_string(q) + ": random B give regular pointed sets with t = |B|", 0,
          {{"failures", bad}, {"samples", samples}}, bad == 0);
}

// ---------------------------------------------------------------- lift

struct LiftConfig {
  std::uint64_t q;
  unsigned h;
  unsigned s;
  const char* base;
};

void suite_lift(Ctx& ctx, const LiftConfig& cfg) {
  const PointSet S = build_family(spec_of(cfg.base, cfg.q));
  const Field& small = S.field();
  const TowerMap tower(create_field(small.characteristic(), small.degree() * cfg.h), small.degree());
  const auto basis = default_lift_basis(tower, cfg.s);
  const PointSet L = lift(S, tower, basis);
  const std::string name = "lift q=" + std::to_string(cfg.q) + " h=" + std::to_string(cfg.h) +
                           " s=" + std::to_string(cfg.s) + " base=" + cfg.base;

  const LiftCensus census = direction_census(L, S, tower, basis);
  const std::uint64_t qh = ipow(cfg.q, cfg.h);
  const std::uint64_t qs1 = ipow(cfg.q, cfg.s + 1);
  ctx.add(name + ": direction census",
          {{"covered_directions", qs1},
           {"uncovered_directions", qh - qs1},
           {"covered_external_lines", qh - qs1},
           {"uncovered_tangents", ipow(cfg.q, cfg.s) * census.base_size},
           {"class_sum", cfg.q},
           {"divisor", cfg.s + 1 == cfg.h ? nlohmann::json(ipow(cfg.q, 2 * cfg.h - 1)) : nlohmann::json(nullptr)}},
          to_json(census), census.ok());

  const IntersectionEnumerator ES = ctx.enumerate_checked(S);
  const TypeReport base = classify(S, ES, standard_frame(S.plane()));
  const IntersectionEnumerator EL = ctx.enumerate_checked(L);
  const TypeReport rep = classify(L, EL, standard_frame(L.plane()));
  std::vector<std::uint32_t> allowed{0, 1};
  allowed.insert(allowed.end(), base.affine_types.begin(), base.affine_types.end());
  ctx.add(name + ": affine types within (0, 1, types of S)", {{"within", allowed}},
          {{"types", rep.affine_types}, {"base", pointed_signature(base)}}, types_within(rep, allowed));
  if (cfg.s + 1 == cfg.h)
    ctx.add(name + ": regular of affine type for s = h - 1", true, rep.is_regular_affine, rep.is_regular_affine);

  if (base.t) {
    const FamilyTag tag{FamilyTag::Kind::Lift, cfg.q, cfg.h, cfg.s, *base.t};
    const bool required = cfg.s + 1 == cfg.h;
    const DivisibilityReport div = enumerator_divisibility_check(EL, tag);
    ctx.add(name + ": intersection enumerator congruences", "all pass", to_json(div), div.all_pass(), required);
    const WeightEnumerator W = weights_from_enumerator(L, EL);
    const std::uint64_t M = reduction_modulus(tag);
    const auto got = reduce_mod(W, M);
    const auto want = expected_reduction(tag, L.size());
    ctx.add(name + ": weight enumerator mod q^(2s+1)",
            {{"modulus", M}, {"residues", residues_json(want)}, {"text", render_residues(want, M, false)}},
            {{"residues", residues_json(got)}, {"text", render_residues(got, M, false)}}, got == want, required);
  }
}

// ---------------------------------------------------------------- codes

void route_equality(Ctx& ctx, const std::string& name, const PointSet& X, const IntersectionEnumerator& E) {
  const WeightEnumerator geo = weights_from_enumerator(X, E);
  const WeightEnumerator ex = weights_exhaustive(code_from_set(X), ctx.opt.workers);
  ctx.add(name + ": weight enumerator, geometric vs exhaustive", to_json(geo), to_json(ex), geo == ex);
}

void regular_pointed_reduction(Ctx& ctx, const std::string& name, const PointSet& X, const IntersectionEnumerator& E) {
  const std::uint64_t Q = X.plane().order();
  const FamilyTag tag{FamilyTag::Kind::RegularPointed, Q, 1, 0, 0};
  const auto got = reduce_mod(weights_from_enumerator(X, E), Q);
  const auto want = expected_reduction(tag, X.size());
  ctx.add(name + ": weight enumerator mod Q = 1 + (Q-1) x^(|X|-1)",
          {{"modulus", Q}, {"text", render_residues(want, Q, false)}},
          {{"text", render_residues(got, Q, false)}}, got == want);
}

void suite_codes_gamma(Ctx& ctx, std::uint64_t q) {
  const std::uint64_t r = *exact_sqrt(q);
  const std::uint64_t n = q * q * q + 1;
  const auto as = gamma_sample(q, ctx.opt.sample, ctx.opt.seed);
  const FamilyTag tn{FamilyTag::Kind::TraceNorm, q, 2, 0, 0};
  const std::uint64_t M = reduction_modulus(tn);
  std::map<std::string, std::uint64_t> params_seen;
  std::vector<std::uint32_t> param_fail, congruence_fail, reduction_fail, rp_fail;
  bool exhaustive_done = false;
  for (std::uint32_t a : as) {
    const PointSet X = gamma_set(q, a);
    const IntersectionEnumerator E = ctx.enumerate_checked(X);
    const CodeReport cr = code_report(X, E);
    const std::string params = "[" + std::to_string(cr.n) + "," + std::to_string(cr.k) + "," +
                               std::to_string(cr.d_min) + "] " + std::to_string(cr.weight_list.size()) + " weights";
    ++params_seen[params];
    bool ok;
    if (q == 4) {
      // Unital classes give two weights, the others four.
      const bool unital = is_unital(X, E);
      ok = cr.n == 65 && cr.k == 3 &&
           (unital ? cr.d_min == 60 && cr.weight_list.size() == 2 : cr.d_min == 58 && cr.weight_list.size() == 4);
    } else {
      ok = cr.n == n && cr.k == 3 && cr.d_min == q * q * q - q - r && cr.divisor % r == 0;
    }
    if (!ok) param_fail.push_back(a);
    if (!enumerator_divisibility_check(E, tn).all_pass()) congruence_fail.push_back(a);
    if (reduce_mod(cr.weights, M) != expected_reduction(tn, X.size())) reduction_fail.push_back(a);
    const FamilyTag rp{FamilyTag::Kind::RegularPointed, q * q, 1, 0, 0};
    if (reduce_mod(cr.weights, q * q) != expected_reduction(rp, X.size())) rp_fail.push_back(a);
    if (q * q <= 81 && (q <= 4 || !exhaustive_done)) {
      route_equality(ctx, "codes q=" + std::to_string(q) + " a=" + std::to_string(a), X, E);
      exhaustive_done = true;
    }
  }
  const std::string tagq = "codes q=" + std::to_string(q);
  nlohmann::json expected_params;
  if (q == 4) {
    expected_params = {"[65,3,60] 2 weights (unital a)", "[65,3,58] 4 weights (other a)"};
  } else {
    expected_params = "[" + std::to_string(n) + ",3," + std::to_string(q * q * q - q - r) + "], weights divisible by " +
                      std::to_string(r);
  }
  ctx.add(tagq + ": code parameters of C(gamma_a)", expected_params,
          {{"a_checked", as.size()}, {"parameters", params_seen}, {"failing_a", param_fail}}, param_fail.empty());
  ctx.add(tagq + ": intersection enumerator congruences mod q^3", "all pass", {{"failing_a", congruence_fail}},
          congruence_fail.empty());
  const auto want = expected_reduction(tn, n);
  ctx.add(tagq + ": weight enumerator mod q^3", render_residues(want, M, false), {{"failing_a", reduction_fail}},
          reduction_fail.empty());
  ctx.add(tagq + ": weight enumerator mod q^2 = 1 + (q^2-1) x^(|X|-1)", "all a", {{"failing_a", rp_fail}},
          rp_fail.empty());
}

void suite_codes_small(Ctx& ctx) {
  // Exhaustive message enumeration over planes of order 4, 9 and 16, and the
  // regular pointed reduction on the odd-order families.
  for (std::uint64_t q : {2, 3}) {
    const PointSet H = build_family(spec_of("hermitian", q));
    const IntersectionEnumerator E = ctx.enumerate_checked(H);
    route_equality(ctx, "codes hermitian q=" + std::to_string(q), H, E);
    regular_pointed_reduction(ctx, "codes hermitian q=" + std::to_string(q), H, E);
  }
  for (std::uint64_t q : {5, 7}) {
    for (int v = 1; v <= 4; ++v) {
      const std::string fam = "oval" + std::to_string(v);
      const PointSet X = build_family(spec_of(fam, q));
      const IntersectionEnumerator E = ctx.enumerate_checked(X);
      route_equality(ctx, "codes " + fam + " q=" + std::to_string(q), X, E);
      regular_pointed_reduction(ctx, "codes " + fam + " q=" + std::to_string(q), X, E);
    }
  }
  for (std::uint64_t q : {9, 13}) {
    const PointSet X = build_family(spec_of("touching", q));
    const IntersectionEnumerator E = ctx.enumerate_checked(X);
    route_equality(ctx, "codes touching q=" + std::to_string(q), X, E);
    regular_pointed_reduction(ctx, "codes touching q=" + std::to_string(q), X, E);
  }
}

void suite_codes(Ctx& ctx) {
  for (std::uint64_t q : qs_or(ctx.opt, {4, 9})) suite_codes_gamma(ctx, q);
  if (!ctx.opt.q) {
    suite_codes_small(ctx);
    // The exact residue polynomial at q = 9.
    const PointSet X = gamma_set(9, 1);
    const WeightEnumerator W = weights_from_enumerator(X, ctx.enumerate_checked(X));
    const std::string got = render_residues(reduce_mod(W, 729), 729, false);
    ctx.add("codes q=9: weight enumerator mod 729", "1 + 648x^720 + 80x^729", got, got == "1 + 648x^720 + 80x^729");
  }
}

// ---------------------------------------------------------------- properties

void suite_properties(Ctx& ctx) {
  std::mt19937_64 rng(ctx.opt.seed);
  for (std::uint64_t q : {2, 3}) {
    const PlanePtr P = plane_of_order(q * q);
    const Field& F = P->field();
    std::uint64_t irregular = 0, indivisible = 0, routes = 0;
    for (int k = 0; k < 50; ++k) {
      AdditiveMap f;
      for (unsigned j = 0; j < F.degree(); ++j) f.coeffs.push_back(Element{static_cast<std::uint32_t>(rng() % F.order())});
      const PointSet X = trace_norm_set(P, f);
      const IntersectionEnumerator E = ctx.enumerate_checked(X);
      const TypeReport rep = classify(X, E, standard_frame(*P));
      if (!rep.is_regular_pointed || rep.t != q) ++irregular;
      for (std::uint32_t m = 0; m < P->order(); ++m) {
        std::map<std::uint32_t, std::uint64_t> per;
        for (std::uint32_t s : E.by_direction[m]) ++per[s];
        for (const auto& [s, c] : per)
          if (c % q != 0) ++indivisible;
      }
      if (weights_from_enumerator(X, E) != weights_exhaustive(code_from_set(X))) ++routes;
    }
    const std::string name = "properties q=" + std::to_string(q) + ", 50 random additive f";
    ctx.add(name + ": regular pointed with t = q", 0, irregular, irregular == 0);
    ctx.add(name + ": per-class k-secant counts divisible by q", 0, indivisible, indivisible == 0);
    ctx.add(name + ": weight enumerator routes agree", 0, routes, routes == 0);
  }

  // Complement: involution and parameters Q - m.
  std::vector<std::pair<std::string, PointSet>> sets;
  for (int v = 1; v <= 4; ++v)
    for (std::uint64_t q : {5, 7}) sets.emplace_back("oval" + std::to_string(v) + " q=" + std::to_string(q),
                                                     build_family(spec_of("oval" + std::to_string(v), q)));
  sets.emplace_back("hermitian q=3", build_family(spec_of("hermitian", 3)));
  sets.emplace_back("touching q=9", build_family(spec_of("touching", 9)));
  for (std::uint32_t a = 1; a < 16; ++a) sets.emplace_back("gamma q=4 a=" + std::to_string(a), gamma_set(4, a));
  std::vector<std::string> bad;
  nlohmann::json shown = nlohmann::json::object();
  for (const auto& [label, X] : sets) {
    const std::uint32_t Q = X.plane().order();
    const PointSet C = complement(X);
    const TypeReport rx = classify(X, ctx.enumerate_checked(X), standard_frame(X.plane()));
    const TypeReport rc = classify(C, ctx.enumerate_checked(C), standard_frame(C.plane()));
    std::vector<std::uint32_t> flipped;
    for (std::uint32_t m : rx.affine_types) flipped.push_back(Q - m);
    std::sort(flipped.begin(), flipped.end());
    const bool ok = complement(C) == X && rx.t && rc.t && *rc.t == Q - *rx.t && rc.affine_types == flipped &&
                    rc.is_regular_pointed == rx.is_regular_pointed;
    if (!ok) bad.push_back(label);
    if (label == "hermitian q=3") shown[label] = {{"set", pointed_signature(rx)}, {"complement", pointed_signature(rc)}};
  }
  ctx.add("properties: complement is an involution with parameters Q - m", {{"hermitian q=3", "[6; 5,8]"}},
          {{"sets", sets.size()}, {"failing", bad}, {"example", shown}}, bad.empty());

  // f(x) = a x^2: unital or [q; q-1, 2q-1] for 4N(a) != 1, non-regular [q; 0, q, 2q] otherwise.
  for (std::uint64_t q : {3, 5, 7}) {
    const FieldPtr F = field_of_order(q * q);
    const Element boundary = quadratic_boundary_a(*F);
    nlohmann::json seen = nlohmann::json::object();
    bool ok = true;
    for (std::uint32_t a = 1; a < q; ++a) {
      FamilySpec spec = spec_of("quadratic", q);
      spec.a = a;
      const PointSet X = build_family(spec);
      const TypeReport rep = classify(X, ctx.enumerate_checked(X), standard_frame(X.plane()));
      const auto Qs = static_cast<std::uint32_t>(q);
      const bool on_boundary = F->mul(Element{4 % static_cast<std::uint32_t>(F->characteristic())},
                                      F->rel_norm(Element{a}, F->degree() / 2)) == F->one();
      if (on_boundary) {
        ok = ok && rep.is_pointed && !rep.is_regular_pointed && rep.t == Qs &&
             rep.affine_types == std::vector<std::uint32_t>{0, Qs, 2 * Qs};
      } else {
        const bool unital = rep.affine_types == std::vector<std::uint32_t>{1, Qs + 1};
        ok = ok && rep.is_regular_pointed && rep.t == Qs &&
             (unital || rep.affine_types == std::vector<std::uint32_t>{Qs - 1, 2 * Qs - 1});
      }
      seen[std::to_string(a)] = {{"signature", pointed_signature(rep)}, {"regular", rep.is_regular_pointed},
                                 {"boundary", on_boundary}};
    }
    ctx.add("properties q=" + std::to_string(q) + ": f(x) = a x^2, a in GF(q)*",
            {{"boundary_a", boundary.index},
             {"boundary", sig(static_cast<std::uint32_t>(q), {0, static_cast<std::uint32_t>(q),
                                                              static_cast<std::uint32_t>(2 * q)}) + " not regular"},
             {"otherwise", "unital or " + sig(static_cast<std::uint32_t>(q), {static_cast<std::uint32_t>(q - 1),
                                                                              static_cast<std::uint32_t>(2 * q - 1)})}},
            seen, ok);
  }
}

SuiteReport run_single(const std::string& name, const VerifyOptions& opt) {
  Ctx ctx(name, opt);
  if (name == "thm12") {
    for (auto q : qs_or(opt, {4, 9})) suite_thm12(ctx, q);
  } else if (name == "remark35") {
    for (auto q : qs_or(opt, {4, 9})) suite_remark35(ctx, q);
  } else if (name == "thm13") {
    for (auto q : qs_or(opt, {4, 9})) suite_thm13(ctx, q);
  } else if (name == "example26") {
    for (auto q : qs_or(opt, {5, 7, 9, 11})) suite_example26(ctx, q);
  } else if (name == "touching") {
    for (auto q : qs_or(opt, {9, 13})) suite_touching(ctx, q);
  } else if (name == "lift") {
    std::vector<LiftConfig> configs;
    if (opt.q) {
      configs = {{*opt.q, 2, 1, "oval1"}, {*opt.q, 2, 1, "oval3"}};
    } else {
      configs = {{5, 2, 1, "oval1"}, {5, 2, 1, "oval3"}, {3, 2, 1, "oval1"},
                 {3, 2, 1, "oval3"}, {3, 3, 1, "oval1"}, {3, 3, 2, "oval1"}};
    }
    for (const auto& c : configs) suite_lift(ctx, c);
  } else if (name == "codes") {
    suite_codes(ctx);
  } else if (name == "properties") {
    suite_properties(ctx);
  } else {
    throw VerifyError("unknown suite '" + name + "'");
  }
  return ctx.finish();
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name != "all") {
    try {
      return run_single(name, opt);
    } catch (const VerifyError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw VerifyError(e.what());
    }
  }
  SuiteReport all;
  all.suite = "all";
  for (const auto& s : suite_names()) {
    if (s == "all") continue;
    try {
      SuiteReport r = run_suite(s, opt);
      for (auto& c : r.checks) all.checks.push_back(std::move(c));
    } catch (const VerifyError& e) {
      // A fixed q may not apply to every suite.
      if (!opt.q) throw;
      all.checks.push_back({s + ": skipped", nullptr, e.what(), false, false});
    }
  }
  return all;
}

nlohmann::json to_json(const Check& c) {
  return {{"name", c.name},
          {"expected", c.expected},
          {"computed", c.computed},
          {"pass", c.pass},
          {"required", c.required}};
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.suite}, {"pass", r.pass()}, {"failures", r.failures()}, {"checks", checks}};
}

}  // namespace regset
