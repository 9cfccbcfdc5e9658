#ifndef POM_DIRECTEDNESS_HPP
#define POM_DIRECTEDNESS_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "pom/projection_problem.hpp"

namespace pom {

/// A direction assigns to each element h an index into a projection family
/// (the section π_h). Its diagonal is f ↦ π_f(f).
using Direction = std::vector<Index>;

inline constexpr std::size_t kDefaultDirectionGuard = 1'000'000;

namespace detail {

inline ElementSubset diagonal_ideal(const FiniteMonoid& m, const ElementSubset& t, const Direction& pi,
                                    const ProjectionFamily& qfam) {
  ElementSubset diag(m.size());
  for (Index f : t.indices()) diag.insert(qfam[pi[f]](f));
  return order_ideal_generated(m, diag).members;
}

}  // namespace detail

/// h is a π-bound in T for T₀: h ∈ T and π_h[T₀] ⊆ I(π̄[T]).
inline bool is_bound(const FiniteMonoid& m, Index h, const ElementSubset& t0, const ElementSubset& t,
                     const Direction& pi, const ProjectionFamily& qfam) {
  if (!t.contains(h)) throw DomainError("a bound must lie in T");
  if (pi.size() != m.size()) throw StructuralError("direction must assign a projection to every element");
  for (Index i : pi)
    if (i >= qfam.size()) throw StructuralError("direction refers to a missing projection");
  ElementSubset ideal = detail::diagonal_ideal(m, t, pi, qfam);
  for (Index g : t0.indices())
    if (!ideal.contains(qfam[pi[h]](g))) return false;
  return true;
}

struct DeltaResult {
  /// Least size of a subset of T that is not bounded for every direction,
  /// or |T| + 1 when every subset is. T is κ-directed iff κ ≤ delta.
  std::size_t delta = 0;
  std::optional<std::vector<Index>> unbounded;  ///< a smallest unbounded subset
  std::optional<Direction> direction;           ///< a direction in which it has no bound
};

/// Only the sections at elements of T enter the definition, so directions
/// are enumerated on T; `guard` bounds |Qfam|^|T|.
inline DeltaResult delta(const FiniteMonoid& m, const ElementSubset& t, const ProjectionFamily& qfam,
                         std::size_t guard = kDefaultDirectionGuard) {
  const std::vector<Index> pts = t.indices();
  const std::size_t k = pts.size();
  DeltaResult out;
  if (k == 0) {
    out.delta = 0;
    out.unbounded = std::vector<Index>{};
    return out;
  }
  if (qfam.empty()) throw DomainError("projection family must be nonempty");
  if (k > 24) throw GuardExceeded("T too large for direction enumeration");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > guard / qfam.size()) throw GuardExceeded("direction enumeration exceeds guard " + std::to_string(guard));
    total *= qfam.size();
  }

  out.delta = k + 1;
  Direction pi(m.size(), 0);
  std::vector<std::uint32_t> miss(k);  // miss[h] = elements of T that h does not bound
  const std::uint32_t full = k == 32 ? ~0U : ((1U << k) - 1U);
  for (std::size_t code = 0; code < total && out.delta > 1; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      pi[pts[i]] = c % qfam.size();
      c /= qfam.size();
    }
    ElementSubset ideal = detail::diagonal_ideal(m, t, pi, qfam);
    bool some_bounds_all = false;
    for (std::size_t h = 0; h < k; ++h) {
      std::uint32_t bits = 0;
      const EndoMap& q = qfam[pi[pts[h]]];
      for (std::size_t g = 0; g < k; ++g)
        if (!ideal.contains(q(pts[g]))) bits |= 1U << g;
      miss[h] = bits;
      if (bits == 0) some_bounds_all = true;
    }
    if (some_bounds_all) continue;
    // smallest S meeting every miss[h] is unbounded
    for (std::uint32_t s = 1; s <= full; ++s) {
      std::size_t size = static_cast<std::size_t>(std::popcount(s));
      if (size >= out.delta) continue;
      bool hits = true;
      for (std::size_t h = 0; h < k && hits; ++h) hits = (s & miss[h]) != 0;
      if (!hits) continue;
      out.delta = size;
      std::vector<Index> sub;
      for (std::size_t g = 0; g < k; ++g)
        if ((s >> g) & 1U) sub.push_back(pts[g]);
      out.unbounded = sub;
      out.direction = pi;
    }
  }
  return out;
}

struct EssentialGreatest {
  std::optional<Index> element;     ///< f₀ ∈ T with f₀ ≥_I f for all f ∈ T
  bool hypothesis_checked = false;  ///< κ(Q[T], I) ≤ Δ_Q(T) evaluated with Q the translates
  bool hypothesis_holds = false;
  std::size_t kappa = 0;
  std::size_t delta = 0;
};

inline EssentialGreatest essential_greatest(const FiniteMonoid& m, const ElementSubset& t, const ElementSubset& ideal,
                                            std::size_t guard = kDefaultDirectionGuard) {
  require_radical_order_ideal(m, ideal, "essential_greatest");
  if (t.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
  RelativeOrder rel(m, ideal);
  EssentialGreatest out;
  for (Index f : t.indices()) {
    bool top = true;
    for (Index g : t.indices())
      if (!rel.ge(f, g)) {
        top = false;
        break;
      }
    if (top) {
      out.element = f;
      break;
    }
  }
  ProjectionFamily tr = translates(m);
  try {
    DeltaResult d = delta(m, t, tr, guard);
    out.delta = d.delta;
    out.kappa = kappa(m, family_image(tr, t), ideal).k;
    out.hypothesis_checked = true;
    out.hypothesis_holds = out.kappa <= out.delta;
  } catch (const GuardExceeded&) {
    out.hypothesis_checked = false;
  }
  if (out.hypothesis_checked && out.hypothesis_holds && !out.element)
    throw CertificateFailure("directed set has no essential greatest element");
  return out;
}

/// h with F(h) ∼_I h, for a ≥_I-increasing F.
inline std::optional<Index> tarski_fixed_point(const FiniteMonoid& m, const EndoMap& fmap, const ElementSubset& ideal,
                                               std::size_t guard = kDefaultDirectionGuard) {
  fmap.check(m);
  require_radical_order_ideal(m, ideal, "tarski_fixed_point");
  RelativeOrder rel(m, ideal);
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (rel.ge(f, g) && !rel.ge(fmap(f), fmap(g)))
        throw DomainError("map is not increasing for the relative order at (" + m.name(f) + ", " + m.name(g) + ")");
  ElementSubset t(m.size());
  for (Index f = 0; f < m.size(); ++f)
    if (rel.ge(fmap(f), f)) t.insert(f);
  if (t.empty()) throw DomainError("no element satisfies F(f) >= f");
  EssentialGreatest eg = essential_greatest(m, t, ideal, guard);
  if (!eg.element) return std::nullopt;
  Index h = *eg.element;
  if (!rel.equivalent(fmap(h), h)) throw CertificateFailure("greatest element is not a fixed class");
  return h;
}

struct ZermeloResult {
  Index fixed_class = 0;
  Index representative = 0;
  bool hypothesis_checked = false;  ///< κ(M, I) ≤ Δ(M) with Q the translates
  bool hypothesis_holds = false;
};

/// Iterates an inflationary class map on M/I from the first class.
inline ZermeloResult zermelo_fixed_point(const FiniteMonoid& m, const ElementSubset& ideal,
                                         const std::vector<Index>& class_map,
                                         std::size_t guard = kDefaultDirectionGuard) {
  require_radical_order_ideal(m, ideal, "zermelo_fixed_point");
  QuotientMonoid q = quotient(m, ideal);
  if (class_map.size() != q.size()) throw StructuralError("class map size does not match the quotient");
  for (Index c = 0; c < q.size(); ++c) {
    if (class_map[c] >= q.size()) throw StructuralError("class map value out of range");
    if (!q.monoid.ge(class_map[c], c)) throw DomainError("class map is not inflationary at " + q.monoid.name(c));
  }
  ZermeloResult out;
  Index c = 0;
  for (std::size_t steps = 0; class_map[c] != c; ++steps) {
    if (steps > q.size()) throw CertificateFailure("inflationary iteration did not stabilise");
    c = class_map[c];
  }
  out.fixed_class = c;
  out.representative = q.representative(c);
  try {
    const ElementSubset all = ElementSubset::full(m.size());
    DeltaResult d = delta(m, all, translates(m), guard);
    out.hypothesis_checked = true;
    out.hypothesis_holds = kappa(m, all, ideal).k <= d.delta;
  } catch (const GuardExceeded&) {
    out.hypothesis_checked = false;
  }
  return out;
}

}  // namespace pom

#endif  // POM_DIRECTEDNESS_HPP
