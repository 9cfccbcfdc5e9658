// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "pom/directedness.hpp"
#include "pom/generators.hpp"
#include "pom/io.hpp"
#include "pom/kappa.hpp"
#include "pom/kelley.hpp"
#include "pom/projection_problem.hpp"
#include "pom/quotient.hpp"
#include "pom/topology.hpp"
#include "support.hpp"

using namespace pom;
using namespace pomtest;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome() const {
    if (failures_ == 0) return {true, std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " failed, first: " + first_};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

std::set<std::vector<Index>> images(const std::vector<EndoMap>& maps) {
  std::set<std::vector<Index>> out;
  for (const auto& p : maps) out.insert(p.image());
  return out;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// ---------------------------------------------------------------------------

Outcome axioms() {
  Tally t;
  auto check = [&](const FiniteMonoid& m, const std::string& name) { t.check(verify_axioms(m).all(), name); };
  for (std::size_t n = 1; n <= 6; ++n) check(chain(n), "C(" + std::to_string(n) + ")");
  for (std::size_t k = 1; k <= 4; ++k) check(boolean_algebra(k), "B(" + std::to_string(k) + ")");
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t c = 1; c <= 2; ++c) check(capped_exponent(n, c), "E(" + std::to_string(n) + "," + std::to_string(c) + ")");
  for (std::size_t d = 1; d <= 2; ++d)
    for (std::size_t l = 1; l <= 2; ++l) check(grid(d, l), "G(" + std::to_string(d) + "," + std::to_string(l) + ")");
  for (const auto& c : catalog_up_to(4))
    for (std::size_t k = 1; k <= 2; ++k) {
      check(product_monoid(c.m, k), c.name + "^" + std::to_string(k));
      PointEmbedding e = embed_points(c.m, k);
      check(e.monoid, "W(" + c.name + "," + std::to_string(k) + ")");
    }
  return t.outcome();
}

Outcome kappa_targets() {
  Tally t;
  FiniteMonoid e = capped_exponent(3, 2);
  const ElementSubset all = ElementSubset::full(e.size());
  const ElementSubset iq = order_ideal_generated(e, ElementSubset::of(e.size(), {13})).members;
  KappaValue k = kappa(e, all, iq);
  t.check(k.k == 4, "kappa(E(3,2), I(q)) = " + std::to_string(k.k));
  t.check(oracle_kappa(e, all, iq) == 4, "exhaustive oracle on E(3,2)");
  for (std::size_t n = 2; n <= 4; ++n) {
    FiniteMonoid b = boolean_algebra(n);
    const ElementSubset z = ElementSubset::of(b.size(), {b.zero()});
    const std::size_t got = kappa(b, ElementSubset::full(b.size()), z).k;
    t.check(got == n + 1, "kappa(B(" + std::to_string(n) + "), {0}) = " + std::to_string(got));
    t.check(oracle_kappa(b, ElementSubset::full(b.size()), z) == got, "oracle on B(" + std::to_string(n) + ")");
  }
  return t.outcome();
}

Outcome erdos_tarski() {
  Tally t;
  for (const auto& c : catalog_up_to(8))
    for (const auto& i : enumerate_ideals(c.m, IdealKind::order_radical)) {
      if (i.members.empty()) continue;
      for (const auto& s : all_subsets(c.m.size())) {
        auto et = erdos_tarski_check(c.m, s, i.members);
        t.check(et.equal, c.name);
      }
    }
  return t.outcome();
}

Outcome reduction_certificate() {
  Tally t;
  for (const auto& c : catalog_up_to(6)) {
    const auto qfam = enumerate_projections(c.m, ProjectionKind::monoid);
    for (const auto& ideal : enumerate_ideals(c.m, IdealKind::order_radical)) {
      if (ideal.members.empty()) continue;
      const ElementSubset& i = ideal.members;
      for (const auto& s : all_subsets(c.m.size())) {
        Reduction r;
        try {
          r = reduce_set(c.m, s, qfam, i);
        } catch (const CertificateFailure& e) {
          t.check(false, c.name + ": " + e.what());
          continue;
        }
        bool ok = r.t0.is_subset_of(s);
        for (const auto& q : qfam) {
          bool on_s = true, on_t0 = true;
          for (Index f : s.indices()) on_s = on_s && i.contains(q(f));
          for (Index f : r.t0.indices()) on_t0 = on_t0 && i.contains(q(f));
          ok = ok && on_s == on_t0;
        }
        for (std::size_t a = 0; a < r.antichain.size(); ++a)
          for (std::size_t b = a + 1; b < r.antichain.size(); ++b)
            ok = ok && i.contains(c.m.mul(r.antichain[a].value, r.antichain[b].value));
        t.check(ok, c.name);
      }
    }
  }
  return t.outcome();
}

Outcome proj_vs_sproj() {
  Tally t;
  for (const auto& c : catalog_up_to(16)) {
    if (!structural_predicates(c.m).idempotent) continue;
    t.check(images(enumerate_projections(c.m, ProjectionKind::order)) ==
                images(enumerate_projections(c.m, ProjectionKind::monoid)),
            c.name);
  }
  FiniteMonoid e = capped_exponent(2, 2);
  auto proj = images(enumerate_projections(e, ProjectionKind::order));
  auto sproj = images(enumerate_projections(e, ProjectionKind::monoid));
  bool strict = proj.size() < sproj.size();
  for (const auto& p : proj) strict = strict && sproj.count(p);
  t.check(strict, "strict inclusion on E(2,2)");
  return t.outcome();
}

Outcome dedekind_round_trip() {
  Tally t;
  for (const auto& c : catalog_up_to(16)) {
    for (const auto& i : enumerate_ideals(c.m, IdealKind::dedekind)) {
      if (i.members.empty()) continue;
      DedekindResult r = dedekind_projection(c.m, i.members);
      t.check(r.projection && r.projection->range(c.m.size()) == i.members && is_order_projection(c.m, *r.projection),
              c.name);
    }
    for (const auto& p : enumerate_projections(c.m, ProjectionKind::order))
      t.check(classify(c.m, p.range(c.m.size())).flags.dedekind, c.name + " range");
  }
  return t.outcome();
}

Outcome topology_suite() {
  Tally t;
  for (const auto& c : catalog_up_to(16)) {
    TopologyResult o = order_topology(c.m);
    t.check(o.report.is_topology && o.report.t0 && o.report.composition_continuous, c.name + " order");
    TopologyResult p = prime_topology(c.m);
    t.check(p.report.is_topology && p.report.composition_continuous && p.report.projections_continuous &&
                p.report.preimages_prime,
            c.name + " prime");
  }
  for (const auto& m : {chain(3), boolean_algebra(2)}) {
    FiniteTopology tau = order_topology(m).topology;
    for_each_map(m.size(), [&](const std::vector<Index>& img) {
      t.check(is_continuous(EndoMap(img), tau).ok == oracle_monotone(m, img), "continuity on a self-map");
    });
  }
  return t.outcome();
}

Outcome grid_additivity() {
  Tally t;
  FiniteMonoid g = grid(2, 2);
  const std::size_t n = g.size();
  auto norm1 = [&](Index x) {
    std::size_t s = 0;
    for (auto d : detail::digits(x, 3, 2)) s += d;
    return s;
  };
  auto join = [&](Index a, Index b) {
    auto da = detail::digits(a, 3, 2), db = detail::digits(b, 3, 2);
    return static_cast<Index>(3 * std::max(da[0], db[0]) + std::max(da[1], db[1]));
  };
  std::size_t maximal = 0;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<Index> fam;
    for (Index x = 0; x < n; ++x)
      if ((mask >> x) & 1U) fam.push_back(x);
    auto disjoint = [&](Index a, Index b) { return g.mul(a, b) == g.zero(); };
    bool ok = !((mask >> g.zero()) & 1U);
    for (std::size_t a = 0; a < fam.size() && ok; ++a)
      for (std::size_t b = a + 1; b < fam.size() && ok; ++b) ok = disjoint(fam[a], fam[b]);
    if (!ok) continue;
    bool is_max = true;
    for (Index y = 0; y < n && is_max; ++y) {
      if (y == g.zero() || ((mask >> y) & 1U)) continue;
      bool fits = true;
      for (Index x : fam) fits = fits && disjoint(x, y);
      if (fits) is_max = false;
    }
    if (!is_max) continue;
    ++maximal;
    Index top = g.zero();
    std::size_t sum = 0;
    for (Index x : fam) {
      top = join(top, x);
      sum += norm1(x);
    }
    t.check(norm1(top) == sum, "family with mask " + std::to_string(mask));
  }
  t.check(maximal > 0, "no maximal families");
  return t.outcome();
}

Outcome halmos_savage() {
  Tally t;
  auto b = std::make_shared<const FiniteMonoid>(boolean_algebra(3));
  SetFunction gamma = uniform_measure(b);
  ElementSubset s = ElementSubset::full(8);
  s.erase(b->zero());
  HalmosSavage hs = halmos_savage_extract(gamma, s);
  t.check(hs.kappa_bound == 4, "kappa bound");
  t.check(hs.h.size() < 4, "|T0| = " + std::to_string(hs.h.size()));
  for (Index f = 0; f < 8; ++f) {
    bool some_t = false, some_h = false;
    for (Index x : s.indices()) some_t = some_t || !gamma.vanishes_at(b->mul(f, x));
    for (Index x : hs.h) some_h = some_h || !gamma.vanishes_at(b->mul(f, x));
    t.check(some_t == some_h, "biconditional at " + b->name(f));
  }
  return t.outcome();
}

Outcome kelley() {
  Tally t;
  auto b = std::make_shared<const FiniteMonoid>(boolean_algebra(3));
  FunctionFamily diracs({dirac_measure(b, 0), dirac_measure(b, 1), dirac_measure(b, 2)});
  KelleyExtraction ex = kelley_extract(diracs);
  t.check(zero_set(ex.f0).members == ElementSubset::of(8, {b->zero()}), "F0 zero set");
  const auto blocks = level_blocks(ex.f0);
  const auto seps = kelley_separation_lp(diracs, blocks);
  const auto gammas = scalarizations(diracs);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    t.check(seps[i].t > 0, "t* > 0 on block " + std::to_string(i));
    // primal lower bound and mixed-strategy upper bound must meet at t*
    const auto hs = blocks[i].indices();
    std::optional<Rational> lower;
    for (Index h : hs) {
      Rational v(0);
      for (std::size_t j = 0; j < gammas.size(); ++j) v += seps[i].lambda[j] * gammas[j][h];
      if (!lower || v < *lower) lower = v;
    }
    Rational ysum(0), upper(0);
    for (std::size_t r = 0; r < hs.size(); ++r) ysum += seps[i].dual[r];
    for (const auto& g : gammas) {
      Rational v(0);
      for (std::size_t r = 0; r < hs.size(); ++r) v += seps[i].dual[r] * g[hs[r]];
      if (ysum > 0 && v / ysum > upper) upper = v / ysum;
    }
    t.check(lower && *lower == seps[i].t && ysum > 0 && upper == seps[i].t, "certificate on block " + std::to_string(i));
  }
  ElementSubset nonempty = ElementSubset::full(8);
  nonempty.erase(b->zero());
  const auto u = kelley_separation_lp(FunctionFamily({uniform_measure(b)}), {nonempty});
  t.check(u[0].t == Rational(1, 3), "uniform t* = " + to_canonical(u[0].t));

  const std::string dir = POM_DATA_DIR;
  auto m = std::make_shared<const FiniteMonoid>(
      io::monoid_from_json(io::parse_json(io::read_text(dir + "/monoid_boolean3.json"))));
  std::size_t families = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("family_", 0) != 0) continue;
    ++families;
    std::vector<SetFunction> members;
    for (const auto& tab : io::family_from_json(io::parse_json(io::read_text(entry.path().string()))))
      members.push_back(io::bind(tab, m));
    KelleyReport r = kelley_report(FunctionFamily(members));
    t.check(r.iii_implies_ii && r.iii_implies_iv, name);
  }
  t.check(families > 0, "no bundled families");
  return t.outcome();
}

Outcome radon_nikodym() {
  Tally t;
  auto b = std::make_shared<const FiniteMonoid>(boolean_algebra(2));
  SetFunction f = uniform_measure(b);
  std::vector<SetFunction> comps;
  for (const auto& p : enumerate_projections(*b, ProjectionKind::order)) comps.push_back(f.composed(p));
  RnCheck r = rn_check(FunctionFamily(comps), FunctionFamily({f}));
  t.check(r.holds, "factorization property");
  t.check(r.kappa_ideal && r.kappa_zero && *r.kappa_ideal <= *r.kappa_zero,
          "kappa " + std::to_string(r.kappa_ideal.value_or(0)) + " <= " + std::to_string(r.kappa_zero.value_or(0)));
  return t.outcome();
}

Outcome cli() {
  Tally t;
  const std::string pomctl = quoted(POMCTL_PATH), dir = POM_DATA_DIR;
  std::size_t docs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++docs;
    const std::string path = entry.path().string();
    Run r = run(pomctl + " canon " + quoted(path));
    t.check(r.status == 0 && r.out == io::read_text(path), "canon " + entry.path().filename().string());
  }
  t.check(docs == 10, std::to_string(docs) + " bundled documents");
  t.check(run(pomctl + " verify " + quoted(dir + "/monoid_boolean3.json")).status == 0, "verify exits 0");
  t.check(run(pomctl + " radical " + quoted(dir + "/monoid_boolean3.json") + " --ideal=idx:7 2>/dev/null").status == 1,
          "domain error exits 1");
  t.check(run(pomctl + " canon " + quoted(dir + "/monoid_nope.json") + " 2>/dev/null").status == 2, "schema error exits 2");
  Run k = run(pomctl + " gen boolean 3 | " + pomctl + " kappa - --ideal=zero");
  t.check(k.status == 0 && k.out.rfind("4\n", 0) == 0, "gen boolean 3 | kappa");
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite", axioms},
      {"kappa targets", kappa_targets},
      {"kappa of T relative to I equals kappa of the quotient", erdos_tarski},
      {"reduction certificate", reduction_certificate},
      {"Proj = SProj on idempotent monoids", proj_vs_sproj},
      {"Dedekind ideals and order projections", dedekind_round_trip},
      {"topology suite", topology_suite},
      {"l1 additivity on grid(2,2)", grid_additivity},
      {"Halmos-Savage extraction", halmos_savage},
      {"Kelley extraction and separation", kelley},
      {"Radon-Nikodym factorization", radon_nikodym},
      {"CLI golden files and exit codes", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
