#ifndef POM_KELLEY_HPP
#define POM_KELLEY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pom/setfunc.hpp"
#include "pom/simplex.hpp"

namespace pom {

struct KelleyExtraction {
  std::vector<Index> selected;    ///< indices into Ψ, in selection order j = 1, 2, …
  std::vector<Rational> weights;  ///< 2⁻ʲ / (1 + ‖F_j(1)‖)
  SetFunction f0;
};

/// F₀ = Σ_j 2⁻ʲ F_j / (1 + ‖F_j(1)‖) over a greedily selected subfamily, with
/// F₀⁻¹(0) = Ψ⁻¹(0) verified exactly.
inline KelleyExtraction kelley_extract(const FunctionFamily& psi, Norm nrm = Norm::l1) {
  const FiniteMonoid& m = psi.monoid();
  const ElementSubset z = psi.common_zero_set();
  std::vector<Index> selected;
  for (Index f = 0; f < m.size(); ++f) {
    if (z.contains(f)) continue;
    bool covered = false;
    for (Index j : selected) covered = covered || !psi[j].vanishes_at(f);
    if (covered) continue;
    for (Index j = 0; j < psi.size(); ++j)
      if (!psi[j].vanishes_at(f)) {
        selected.push_back(j);
        break;
      }
  }
  std::vector<Rational> weights;
  std::vector<VectorValue> vals(m.size(), VectorValue(psi.dim(), Rational(0)));
  for (std::size_t j = 0; j < selected.size(); ++j) {
    const SetFunction& fj = psi[selected[j]];
    const Rational w = dyadic(static_cast<unsigned>(j + 1)) / (1 + norm(fj(m.unit()), nrm));
    weights.push_back(w);
    for (Index f = 0; f < m.size(); ++f)
      for (std::size_t c = 0; c < psi.dim(); ++c) vals[f][c] += w * fj(f)[c];
  }
  SetFunction f0(psi[0].monoid_ptr(), psi.dim(), std::move(vals));
  if (zero_set(f0).members != z) throw CertificateFailure("F0 does not have the common zero set of the family");
  return {std::move(selected), std::move(weights), std::move(f0)};
}

/// The scalarizations x*F with x* a coordinate functional, ordered by
/// member then coordinate.
inline std::vector<std::vector<Rational>> scalarizations(const FunctionFamily& psi) {
  std::vector<std::vector<Rational>> out;
  for (const auto& f : psi.members())
    for (std::size_t c = 0; c < psi.dim(); ++c) {
      std::vector<Rational> g(f.values().size());
      for (Index x = 0; x < g.size(); ++x) g[x] = f(x)[c];
      out.push_back(std::move(g));
    }
  return out;
}

struct Separation {
  Rational t;                   ///< max over convex combinations of the min over the block
  std::vector<Rational> lambda; ///< optimal weights, summing to 1
  std::vector<Rational> dual;   ///< LP multipliers certifying optimality
};

/// For each block solves: maximize t s.t. Σ_j λ_j γ_j(h) ≥ t on the block,
/// Σ λ_j = 1, λ ≥ 0. Blocks must be nonempty and, unless `allow_null_blocks`,
/// disjoint from Ψ⁻¹(0).
inline std::vector<Separation> kelley_separation_lp(const FunctionFamily& psi, const std::vector<ElementSubset>& blocks,
                                                    bool allow_null_blocks = false) {
  const auto gammas = scalarizations(psi);
  const std::size_t k = gammas.size();
  const ElementSubset z = psi.common_zero_set();
  std::vector<Separation> out;
  for (const auto& block : blocks) {
    if (block.universe() != psi.monoid().size()) throw StructuralError("block universe does not match monoid size");
    if (block.empty()) throw DomainError("separation block is empty");
    if (!allow_null_blocks && !(block & z).empty()) throw DomainError("separation block meets the common zero set");
    // variables λ_1..λ_k, t
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (Index h : block.indices()) {
      std::vector<Rational> row(k + 1, Rational(0));
      for (std::size_t j = 0; j < k; ++j) row[j] = -gammas[j][h];
      row[k] = 1;
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
    std::vector<Rational> sum(k + 1, Rational(1)), neg(k + 1, Rational(-1));
    sum[k] = 0;
    neg[k] = 0;
    a.push_back(sum);
    b.emplace_back(1);
    a.push_back(neg);
    b.emplace_back(-1);
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    Simplex<Rational> lp(a, b, c);
    LpResult<Rational> r = lp.solve();
    if (r.status != LpStatus::optimal || !lp.certify(r))
      throw CertificateFailure("separation LP failed to produce a certified optimum");
    Separation s{r.objective, std::vector<Rational>(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(k)), r.dual};
    out.push_back(std::move(s));
  }
  return out;
}

inline constexpr std::size_t kDefaultLevelGuard = 1'000'000;

/// The distinct nonempty level sets M(i, j) = {f : F₀(f)_i > 1/j}, ordered by
/// coordinate then j.
inline std::vector<ElementSubset> level_blocks(const SetFunction& f0, std::size_t guard = kDefaultLevelGuard) {
  const std::size_t n = f0.monoid().size();
  std::vector<ElementSubset> out;
  for (std::size_t i = 0; i < f0.dim(); ++i) {
    std::optional<Rational> least;
    for (Index f = 0; f < n; ++f)
      if (f0(f)[i] > 0 && (!least || f0(f)[i] < *least)) least = f0(f)[i];
    if (!least) continue;
    // beyond j = ⌊1/least⌋ + 1 the level set no longer grows
    const BigInt top = BigInt(denominator(*least) / numerator(*least)) + 1;
    if (top > BigInt(guard)) throw GuardExceeded("too many level sets");
    const std::size_t last = top.convert_to<std::size_t>();
    for (std::size_t j = 1; j <= last; ++j) {
      const Rational thr(1, static_cast<long>(j));
      ElementSubset s(n);
      for (Index f = 0; f < n; ++f)
        if (f0(f)[i] > thr) s.insert(f);
      if (s.empty() || std::find(out.begin(), out.end(), s) != out.end()) continue;
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// A finite p.o. monoid of functions inside the order ideal I(Ψ): Ψ, one
/// top-supported step c·eᵢ·1[f = 1] for every positive coordinate value
/// c = ψ(1)ᵢ, and 0, closed under the family composition, with a formal unit
/// adjoined. Its κ realizes κ(I(Ψ)).
struct FunctionSemigroup {
  std::vector<std::vector<VectorValue>> tables;  ///< one per non-unit element
  FiniteMonoid monoid;
};

inline FunctionSemigroup ideal_semigroup(const FunctionFamily& psi, std::size_t guard = kDefaultSizeGuard) {
  const FiniteMonoid& m = psi.monoid();
  const std::size_t d = psi.dim();
  using Table = std::vector<VectorValue>;
  std::map<Table, Index> index;
  std::vector<Table> tables;
  auto add = [&](Table t) {
    if (index.count(t)) return;
    if (tables.size() >= guard) throw GuardExceeded("function semigroup exceeds guard " + std::to_string(guard));
    index.emplace(t, tables.size());
    tables.push_back(std::move(t));
  };
  add(Table(m.size(), VectorValue(d, Rational(0))));
  for (const auto& f : psi.members()) add(f.values());
  for (const auto& f : psi.members())
    for (std::size_t i = 0; i < d; ++i) {
      if (f(m.unit())[i] == 0) continue;
      Table t(m.size(), VectorValue(d, Rational(0)));
      t[m.unit()][i] = f(m.unit())[i];
      add(std::move(t));
    }
  auto compose = [&](const Table& a, const Table& b) {
    Table t(m.size());
    for (Index x = 0; x < m.size(); ++x) t[x] = psi.compose_value(a[x], b[x]);
    return t;
  };
  // tables appended here are themselves visited as `a` later on
  for (std::size_t a = 0; a < tables.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      add(compose(tables[a], tables[b]));
      add(compose(tables[b], tables[a]));
    }
  const std::size_t n = tables.size();
  std::vector<std::vector<Index>> op(n, std::vector<Index>(n));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (Index a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "0" : "g" + std::to_string(a));
    for (Index b = 0; b < n; ++b) {
      op[a][b] = index.at(compose(tables[a], tables[b]));
      bool le = true;
      for (Index x = 0; x < m.size() && le; ++x) le = vec_le(tables[a][x], tables[b][x]);
      leq[a][b] = le;
    }
  }
  FiniteMonoid sg = adjoin_unit(std::move(names), op, leq, "1");
  return {std::move(tables), std::move(sg)};
}

/// κ(I(Ψ)) with disjointness FG = 0. The adjoined unit is not in I(Ψ).
inline std::size_t kappa_of_ideal(const FunctionFamily& psi, std::size_t guard = kDefaultSizeGuard) {
  FunctionSemigroup s = ideal_semigroup(psi, guard);
  ElementSubset ideal = ElementSubset::full(s.monoid.size());
  ideal.erase(s.monoid.unit());
  return kappa(s.monoid, ideal).k;
}

struct KelleyReport {
  bool trivial = false;              ///< Ψ⁻¹(0) = M
  std::size_t kappa_ideal = 1;       ///< (i): κ(I(Ψ)), finite hence below ℵ₁
  std::vector<ElementSubset> blocks{}; ///< (ii): the level sets of F₀
  std::vector<Separation> separations{};
  bool separated = true;             ///< (ii): every t* > 0
  KelleyExtraction extraction;       ///< (iii)
  bool members_in_sigma = true;      ///< (iv), left side
  IdealSubset zero_set;              ///< (iv), right side: classify(Ψ⁻¹(0))
  bool zero_set_radical_order = false;
  bool iii_implies_ii = true;
  bool iii_implies_iv = true;        ///< (iii) with Ψ ⊆ 𝕄_σ gives a radical order ideal
};

inline KelleyReport kelley_report(const FunctionFamily& psi, Norm nrm = Norm::l1, std::size_t guard = kDefaultSizeGuard) {
  const FiniteMonoid& m = psi.monoid();
  KelleyExtraction ex = kelley_extract(psi, nrm);
  KelleyReport r{.extraction = ex, .zero_set = classify(m, psi.common_zero_set())};
  r.trivial = r.zero_set.members == ElementSubset::full(m.size());
  r.kappa_ideal = kappa_of_ideal(psi, guard);
  r.blocks = level_blocks(r.extraction.f0);
  r.separations = kelley_separation_lp(psi, r.blocks);
  for (const auto& s : r.separations) r.separated = r.separated && s.t > 0;
  for (const auto& f : psi.members()) r.members_in_sigma = r.members_in_sigma && in_MON_sigma(f);
  const auto& fl = r.zero_set.flags;
  r.zero_set_radical_order = fl.order_ideal && fl.monoid_ideal && fl.radical;
  r.iii_implies_ii = r.separated;
  r.iii_implies_iv = !r.members_in_sigma || r.zero_set_radical_order;
  return r;
}

struct RnViolation {
  Index g;              ///< index into Ψ
  Index f;              ///< index into the comparison family
  bool zero_inclusion;  ///< F⁻¹(0) ⊆ G⁻¹(0)
  bool factorizes;      ///< G = F∘P for some order projection P
};

struct RnCheck {
  bool holds = true;                    ///< the factorization property on every pair
  std::vector<RnViolation> violations;
  std::size_t projections = 0;
  std::optional<std::size_t> kappa_ideal;  ///< κ(I(Ψ)), when the property holds
  std::optional<std::size_t> kappa_zero;   ///< κ(M, F₀⁻¹(0))
  bool kappa_ok = true;
};

/// F⁻¹(0) ⊆ G⁻¹(0) ⇔ G = F∘P for some P ∈ Proj, for G ∈ Ψ and F in `mon`;
/// when it holds, also κ(I(Ψ)) ≤ κ(M, F₀⁻¹(0)).
inline RnCheck rn_check(const FunctionFamily& psi, const FunctionFamily& mon, std::size_t guard = kDefaultProjectionGuard) {
  const FiniteMonoid& m = psi.monoid();
  if (!(mon.monoid() == m) || mon.dim() != psi.dim()) throw StructuralError("families live on different spaces");
  for (const auto& f : mon.members())
    if (!(mon.compose(f, f) == f)) throw DomainError("comparison family is not idempotent");
  const auto proj = enumerate_projections(m, ProjectionKind::order, guard);
  RnCheck out;
  out.projections = proj.size();
  for (Index g = 0; g < psi.size(); ++g)
    for (Index f = 0; f < mon.size(); ++f) {
      const bool inclusion = zero_set(mon[f]).members.is_subset_of(zero_set(psi[g]).members);
      bool factors = false;
      for (const auto& p : proj)
        if (mon[f].composed(p) == psi[g]) {
          factors = true;
          break;
        }
      if (inclusion != factors) {
        out.holds = false;
        out.violations.push_back({g, f, inclusion, factors});
      }
    }
  if (out.holds) {
    KelleyExtraction ex = kelley_extract(psi);
    out.kappa_ideal = kappa_of_ideal(psi);
    out.kappa_zero = kappa(m, ElementSubset::full(m.size()), zero_set(ex.f0).members).k;
    out.kappa_ok = *out.kappa_ideal <= *out.kappa_zero;
    bool sigma = true;
    for (const auto& f : psi.members()) sigma = sigma && in_MON_sigma(f);
    if (sigma && !out.kappa_ok) throw CertificateFailure("kappa of the function ideal exceeds kappa of the zero set");
  }
  return out;
}

}  // namespace pom

#endif  // POM_KELLEY_HPP
