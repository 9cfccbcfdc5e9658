// pomctl: command-line front end for the pom library.
//
// Exit codes: 0 success, 1 hypothesis violated or guard exceeded,
// 2 usage or schema error, 3 a verified certificate failed.

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pom/directedness.hpp"
#include "pom/generators.hpp"
#include "pom/io.hpp"
#include "pom/kelley.hpp"
#include "pom/topology.hpp"

namespace {

using pom::ElementSubset;
using pom::FiniteMonoid;
using pom::Index;
using pom::io::Json;
using pom::io::Report;

struct Globals {
  std::size_t guard = 0;  // 0: library default
  std::string norm = "l1";
  std::string output = "text";
};

std::size_t guard_or(const Globals& g, std::size_t fallback) { return g.guard ? g.guard : fallback; }

pom::Norm norm_of(const Globals& g) { return g.norm == "linf" ? pom::Norm::linf : pom::Norm::l1; }

std::shared_ptr<const FiniteMonoid> load_monoid(const std::string& path) {
  return std::make_shared<const FiniteMonoid>(pom::io::monoid_from_json(pom::io::parse_json(pom::io::read_text(path))));
}

std::vector<Index> parse_indices(const std::string& list, std::size_t n) {
  std::vector<Index> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw pom::StructuralError("bad element index '" + tok + "'");
    if (v >= n) throw pom::StructuralError("element index " + tok + " out of range");
    out.push_back(v);
  }
  return out;
}

/// zero | empty | all | nonzero | down:i,j | idx:i,j | <path to an ideal document>
ElementSubset parse_subset(const std::string& spec, const FiniteMonoid& m) {
  const std::size_t n = m.size();
  if (spec == "zero") return ElementSubset::of(n, {m.zero()});
  if (spec == "empty") return ElementSubset(n);
  if (spec == "all") return ElementSubset::full(n);
  if (spec == "nonzero") return ElementSubset::of(n, {m.zero()}).complement();
  if (spec.rfind("idx:", 0) == 0) return ElementSubset::of(n, parse_indices(spec.substr(4), n));
  if (spec.rfind("down:", 0) == 0)
    return pom::order_ideal_generated(m, ElementSubset::of(n, parse_indices(spec.substr(5), n))).members;
  auto doc = pom::io::ideal_from_json(pom::io::parse_json(pom::io::read_text(spec)));
  if (!(doc.monoid.monoid == m)) throw pom::StructuralError("ideal document refers to a different monoid");
  return doc.members;
}

pom::ProjectionFamily parse_family(const std::string& spec, const FiniteMonoid& m, const Globals& g) {
  if (spec == "translates") return pom::translates(m);
  if (spec == "identity") return {pom::EndoMap::identity(m.size())};
  if (spec == "monoid-projections")
    return pom::enumerate_projections(m, pom::ProjectionKind::monoid, guard_or(g, pom::kDefaultProjectionGuard));
  if (spec == "order-projections")
    return pom::enumerate_projections(m, pom::ProjectionKind::order, guard_or(g, pom::kDefaultProjectionGuard));
  throw pom::StructuralError("unknown projection family '" + spec + "'");
}

pom::FunctionFamily load_function_family(const std::string& path, const std::shared_ptr<const FiniteMonoid>& m) {
  const Json j = pom::io::parse_json(pom::io::read_text(path));
  std::vector<pom::SetFunction> members;
  if (pom::io::document_kind(j) == "setfunction") {
    members.push_back(pom::io::bind(pom::io::value_table_from_json(j), m));
  } else {
    auto tables = pom::io::family_from_json(j);
    for (std::size_t i = 0; i < tables.size(); ++i)
      members.push_back(pom::io::bind(tables[i], m, "/members/" + std::to_string(i)));
  }
  return pom::FunctionFamily(std::move(members));
}

Json rational_list(const std::vector<pom::Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(pom::to_canonical(x));
  return a;
}

void emit(const Globals& g, const Report& r) {
  if (g.output == "text") {
    for (const auto& c : r.checks) {
      std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL");
      if (!c.witness.is_null()) std::cout << " " << c.witness.dump();
      std::cout << "\n";
    }
  } else {
    std::cout << pom::io::dump(pom::io::to_json(r)) << "\n";
  }
}

void emit_document(const Json& j) { std::cout << pom::io::dump(j) << "\n"; }

Json law_witness(const pom::Law& l) { return l.holds ? Json(nullptr) : Json(l.witness); }

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<std::size_t>& params, const Globals& g) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw pom::StructuralError("gen " + family + " takes " + std::to_string(k) + " parameter(s)");
  };
  const std::size_t guard = guard_or(g, pom::kDefaultSizeGuard);
  if (family == "chain") {
    need(1);
    emit_document(pom::io::to_json(pom::chain(params[0], guard)));
  } else if (family == "boolean") {
    need(1);
    emit_document(pom::io::to_json(pom::boolean_algebra(params[0], guard)));
  } else if (family == "capped") {
    need(2);
    emit_document(pom::io::to_json(pom::capped_exponent(params[0], params[1], guard)));
  } else if (family == "grid") {
    need(2);
    emit_document(pom::io::to_json(pom::grid(params[0], params[1], guard)));
  } else {
    throw pom::StructuralError("unknown generator family '" + family + "'");
  }
  return 0;
}

int cmd_verify(const std::string& path, const Globals& g) {
  auto m = load_monoid(path);
  pom::AxiomReport a = pom::verify_axioms(*m);
  Report r;
  r.add("associative", a.associative.holds, law_witness(a.associative));
  r.add("commutative", a.commutative.holds, law_witness(a.commutative));
  r.add("unit", a.unit_ok.holds, law_witness(a.unit_ok));
  r.add("partial_order", a.order_ok.holds, law_witness(a.order_ok));
  r.add("compatible", a.compat_ok.holds, law_witness(a.compat_ok));
  r.add("unit_is_top", a.top_ok.holds, law_witness(a.top_ok));
  r.add("zero_is_least", a.least_ok.holds, law_witness(a.least_ok));
  emit(g, r);
  return r.all() ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& ideal, const Globals& g) {
  auto m = load_monoid(path);
  pom::IdealSubset s = pom::classify(*m, parse_subset(ideal, *m));
  Report r;
  r.add("order_ideal", s.flags.order_ideal);
  r.add("monoid_ideal", s.flags.monoid_ideal);
  r.add("radical", s.flags.radical);
  r.add("prime", s.flags.prime);
  Json w = nullptr;
  if (s.projection) w = s.projection->image();
  else if (s.dedekind_witness) w = *s.dedekind_witness;
  r.add("dedekind", s.flags.dedekind, w);
  emit(g, r);
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& ideal, bool report, const Globals& g) {
  auto m = load_monoid(path);
  pom::QuotientMonoid q = pom::quotient(*m, parse_subset(ideal, *m));
  if (report) {
    Report r;
    r.add("well_defined", q.report.well_defined);
    r.add("unit_is_top", q.report.top_ok);
    r.add("homomorphism", q.report.homomorphism);
    r.add("preserves_order", q.report.preserves_order);
    r.add("preserves_natural_order", q.report.preserves_natural_order);
    r.add("not_nilpotent", q.report.not_nilpotent);
    r.add("classes", true, q.class_of);
    emit(g, r);
  } else {
    emit_document(pom::io::to_json(q.monoid));
  }
  return 0;
}

int cmd_radical(const std::string& path, const std::string& ideal, const Globals&) {
  auto m = load_monoid(path);
  pom::IdealSubset rad = pom::radical_of(*m, parse_subset(ideal, *m));
  emit_document(pom::io::to_json(pom::io::IdealDocument{{*m, std::nullopt}, rad.members}));
  return 0;
}

int cmd_kappa(const std::string& path, const std::string& set, const std::string& ideal, const Globals& g) {
  auto m = load_monoid(path);
  pom::KappaValue k = pom::kappa(*m, parse_subset(set, *m), parse_subset(ideal, *m));
  if (g.output == "text") {
    std::cout << k.k << "\n";
    std::cout << "witness:";
    for (Index f : k.witness) std::cout << " " << m->name(f);
    std::cout << "\n";
  } else {
    Report r;
    Json w;
    w["k"] = k.k;
    w["antichain"] = k.witness;
    r.add("kappa", true, w);
    emit(g, r);
  }
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& set, const std::string& family, const std::string& ideal,
               const Globals& g) {
  auto m = load_monoid(path);
  auto qfam = parse_family(family, *m, g);
  pom::Reduction red = pom::reduce_set(*m, parse_subset(set, *m), qfam, parse_subset(ideal, *m));
  Report r;
  r.add("t0", true, red.t0.indices());
  Json anti = Json::array();
  for (const auto& a : red.antichain) anti.push_back(Json::array({a.projection, a.source, a.value}));
  r.add("antichain", true, anti);
  r.add("size_below_kappa", red.t0.count() < red.kappa_bound,
        Json::array({red.t0.count(), red.kappa_bound}));
  r.add("decides_family", true);
  r.add("disjointness", true);
  emit(g, r);
  return 0;
}

int cmd_project(const std::string& path, const std::string& set, const std::string& family, const std::string& ideal,
                const Globals& g) {
  auto m = load_monoid(path);
  auto qfam = parse_family(family, *m, g);
  auto sol = pom::solve_projection_problem(*m, parse_subset(set, *m), qfam, parse_subset(ideal, *m));
  Report r;
  r.add("solvable", sol.has_value(), sol ? Json(qfam[*sol].image()) : Json(nullptr));
  emit(g, r);
  return 0;
}

int cmd_delta(const std::string& path, const std::string& set, const std::string& family, const Globals& g) {
  auto m = load_monoid(path);
  auto qfam = parse_family(family, *m, g);
  pom::DeltaResult d = pom::delta(*m, parse_subset(set, *m), qfam, guard_or(g, pom::kDefaultDirectionGuard));
  Report r;
  Json w;
  w["delta"] = d.delta;
  w["unbounded"] = d.unbounded ? Json(*d.unbounded) : Json(nullptr);
  r.add("delta", true, w);
  emit(g, r);
  return 0;
}

int cmd_topology(const std::string& path, const std::string& kind, bool dot, const Globals& g) {
  auto m = load_monoid(path);
  const std::size_t guard = guard_or(g, pom::kDefaultProjectionGuard);
  pom::TopologyResult t = kind == "prime" ? pom::prime_topology(*m, guard) : pom::order_topology(*m);
  if (dot) {
    std::cout << pom::specialization_dot(*m, t.topology);
    return 0;
  }
  Json opens = Json::array();
  for (const auto& u : t.topology.opens()) opens.push_back(u.indices());
  Report r;
  r.add("opens", true, opens);
  r.add("is_topology", t.report.is_topology);
  r.add("generators_closed", t.report.generators_form_topology);
  r.add("t0", t.report.t0);
  r.add("composition_continuous", t.report.composition_continuous);
  r.add("perp_closed", t.report.perp_closed);
  if (kind == "prime") {
    r.add("projections_continuous", t.report.projections_continuous, t.report.projections_checked);
    r.add("preimages_prime", t.report.preimages_prime);
  }
  emit(g, r);
  return 0;
}

int cmd_hs_extract(const std::string& path, const std::string& fn, const std::string& set, const Globals& g) {
  auto m = load_monoid(path);
  pom::SetFunction gamma = pom::io::bind(pom::io::value_table_from_json(pom::io::parse_json(pom::io::read_text(fn))), m);
  const ElementSubset t = parse_subset(set, *m);
  pom::HalmosSavage hs = pom::halmos_savage_extract(gamma, t);
  pom::EquivalentCapacity psi = pom::equivalent_capacity(gamma, hs.h, t);
  Report r;
  r.add("h", true, hs.h);
  r.add("size_below_kappa", hs.h.size() < hs.kappa_bound, Json::array({hs.h.size(), hs.kappa_bound}));
  r.add("biconditional", true);
  r.add("equivalent_capacity", true, pom::io::to_json(psi.psi));
  emit(g, r);
  return 0;
}

int cmd_kelley(const std::string& path, const std::string& fam, const Globals& g) {
  auto m = load_monoid(path);
  pom::FunctionFamily psi = load_function_family(fam, m);
  pom::KelleyReport k = pom::kelley_report(psi, norm_of(g), guard_or(g, pom::kDefaultSizeGuard));
  Report r;
  const auto& laws = psi.laws();
  r.add("composition_closed", laws.closed.holds, law_witness(laws.closed));
  r.add("composition_compatible", laws.compatible.holds, law_witness(laws.compatible));
  r.add("translation_inequality", laws.translation.holds, law_witness(laws.translation));
  r.add("trivial", k.trivial);
  r.add("i_kappa_ideal", true, k.kappa_ideal);
  Json seps = Json::array();
  for (std::size_t i = 0; i < k.blocks.size(); ++i) {
    Json s;
    s["block"] = k.blocks[i].indices();
    s["t"] = pom::to_canonical(k.separations[i].t);
    s["lambda"] = rational_list(k.separations[i].lambda);
    seps.push_back(std::move(s));
  }
  r.add("ii_separated", k.separated, seps);
  Json ex;
  ex["selected"] = k.extraction.selected;
  ex["weights"] = rational_list(k.extraction.weights);
  ex["f0"] = pom::io::to_json(k.extraction.f0);
  r.add("iii_extraction", true, ex);
  r.add("iv_members_in_sigma", k.members_in_sigma);
  r.add("iv_zero_set_radical_order", k.zero_set_radical_order, k.zero_set.members.indices());
  r.add("iii_implies_ii", k.iii_implies_ii);
  r.add("iii_implies_iv", k.iii_implies_iv);
  emit(g, r);
  return 0;
}

int cmd_lp_separate(const std::string& path, const std::string& fam, const std::vector<std::string>& blocks,
                    const Globals& g) {
  auto m = load_monoid(path);
  pom::FunctionFamily psi = load_function_family(fam, m);
  std::vector<ElementSubset> bs;
  for (const auto& b : blocks) bs.push_back(parse_subset(b, *m));
  if (bs.empty()) bs = pom::level_blocks(pom::kelley_extract(psi, norm_of(g)).f0);
  auto seps = pom::kelley_separation_lp(psi, bs);
  Report r;
  bool all = true;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Json w;
    w["block"] = bs[i].indices();
    w["t"] = pom::to_canonical(seps[i].t);
    w["lambda"] = rational_list(seps[i].lambda);
    w["dual"] = rational_list(seps[i].dual);
    r.add("block_" + std::to_string(i), seps[i].t > 0, w);
    all = all && seps[i].t > 0;
  }
  r.add("separated", all);
  emit(g, r);
  return 0;
}

int cmd_canon(const std::string& path) {
  std::cout << pom::io::canonicalize(pom::io::read_text(path)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite positively ordered monoids: ideals, projections, kappa, set functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--guard", g.guard, "enumeration guard (0 = default)");
  app.add_option("--norm", g.norm, "norm on value vectors")->check(CLI::IsMember({"l1", "linf"}));
  app.add_option("--output", g.output, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string monoid, ideal = "zero", set = "all", family = "translates", kind = "order", fn, gen_family;
  std::vector<std::size_t> params;
  std::vector<std::string> blocks;
  bool dot = false, qreport = false;

  auto* gen = app.add_subcommand("gen", "emit a generated monoid");
  gen->add_option("family", gen_family, "chain | boolean | capped | grid")->required();
  gen->add_option("params", params, "size parameters")->required();

  auto monoid_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("monoid", monoid, "monoid document path or -")->required();
    return c;
  };
  auto* verify = monoid_cmd("verify", "check the p.o. monoid axioms");
  auto* classify = monoid_cmd("classify", "classify a subset");
  auto* quotient = monoid_cmd("quotient", "quotient by a monoid ideal");
  auto* radical = monoid_cmd("radical", "radical of a monoid ideal");
  auto* kappa = monoid_cmd("kappa", "kappa of a set relative to an ideal");
  auto* reduce = monoid_cmd("reduce", "reduce a set for the projection problem");
  auto* project = monoid_cmd("project", "solve the projection problem");
  auto* delta = monoid_cmd("delta", "directedness index of a set");
  auto* topology = monoid_cmd("topology", "order or prime topology");
  auto* hs = monoid_cmd("hs-extract", "Halmos-Savage extraction for a set function");
  auto* kelley = monoid_cmd("kelley", "Kelley report for a family of set functions");
  auto* lp = monoid_cmd("lp-separate", "separation LP over blocks");
  auto* canon = app.add_subcommand("canon", "print the canonical form of a document");
  canon->add_option("document", monoid, "document path or -")->required();

  for (auto* c : {classify, quotient, radical, kappa, reduce, project})
    c->add_option("--ideal", ideal, "zero | empty | all | down:i,j | idx:i,j | <ideal document>");
  for (auto* c : {kappa, reduce, project, delta, hs})
    c->add_option("--set", set, "all | nonzero | zero | empty | down:i,j | idx:i,j | <ideal document>");
  for (auto* c : {reduce, project, delta})
    c->add_option("--family", family, "translates | monoid-projections | order-projections | identity");
  quotient->add_flag("--report", qreport, "print the quotient checks instead of the monoid");
  topology->add_option("--kind", kind, "order | prime")->check(CLI::IsMember({"order", "prime"}));
  topology->add_flag("--dot", dot, "print the specialization order as Graphviz");
  for (auto* c : {hs, kelley, lp}) c->add_option("function", fn, "set function or family document")->required();
  lp->add_option("--block", blocks, "block subset (repeatable); default: level sets of F0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(gen_family, params, g);
    if (*verify) return cmd_verify(monoid, g);
    if (*classify) return cmd_classify(monoid, ideal, g);
    if (*quotient) return cmd_quotient(monoid, ideal, qreport, g);
    if (*radical) return cmd_radical(monoid, ideal, g);
    if (*kappa) return cmd_kappa(monoid, set, ideal, g);
    if (*reduce) return cmd_reduce(monoid, set, family, ideal, g);
    if (*project) return cmd_project(monoid, set, family, ideal, g);
    if (*delta) return cmd_delta(monoid, set, family, g);
    if (*topology) return cmd_topology(monoid, kind, dot, g);
    if (*hs) return cmd_hs_extract(monoid, fn, set, g);
    if (*kelley) return cmd_kelley(monoid, fn, g);
    if (*lp) return cmd_lp_separate(monoid, fn, blocks, g);
    if (*canon) return cmd_canon(monoid);
  } catch (const pom::CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 3;
  } catch (const pom::DomainError& e) {  // includes GuardExceeded
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const pom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
