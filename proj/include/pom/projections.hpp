#ifndef POM_PROJECTIONS_HPP
#define POM_PROJECTIONS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pom/ideals.hpp"

namespace pom {

/// Result of a map predicate. On failure `law` names the violated condition
/// and `witness` holds the first violating tuple in canonical order.
struct MapCheck {
  bool ok = true;
  std::string law;
  std::vector<Index> witness;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline MapCheck check_monotone_contractive(const FiniteMonoid& m, const EndoMap& p) {
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (m.le(f, g) && !m.le(p(f), p(g))) return {false, "monotone", {f, g}};
  for (Index f = 0; f < m.size(); ++f)
    if (!m.ge(f, p(f))) return {false, "contractive", {f}};
  return {};
}

}  // namespace detail

/// Order preserving, f ≥ P(f), and P(f) ≥ g implies P(g) = g.
inline MapCheck is_order_projection(const FiniteMonoid& m, const EndoMap& p) {
  p.check(m);
  if (auto c = detail::check_monotone_contractive(m, p); !c) return c;
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (m.ge(p(f), g) && p(g) != g) return {false, "idempotent", {f, g}};
  return {};
}

/// Order preserving, f ≥ Q(f), and f·Q(g) ≤ Q(fg).
inline MapCheck is_monoid_projection(const FiniteMonoid& m, const EndoMap& q) {
  q.check(m);
  if (auto c = detail::check_monotone_contractive(m, q); !c) return c;
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (!m.le(m.mul(f, q(g)), q(m.mul(f, g)))) return {false, "multiplicative", {f, g}};
  return {};
}

/// T_g(f) = gf
inline EndoMap translate(const FiniteMonoid& m, Index g) {
  if (g >= m.size()) throw StructuralError("translate element out of range");
  std::vector<Index> img(m.size());
  for (Index f = 0; f < m.size(); ++f) img[f] = m.mul(g, f);
  return EndoMap(std::move(img));
}

inline std::vector<EndoMap> translates(const FiniteMonoid& m) {
  std::vector<EndoMap> out;
  for (Index g = 0; g < m.size(); ++g) out.push_back(translate(m, g));
  return out;
}

enum class ProjectionKind { order, monoid };

inline constexpr std::size_t kDefaultProjectionGuard = 10'000'000;

/// All order (or monoid) projections, lexicographically ordered by image.
/// Backtracking over a linear extension; `guard` bounds visited search nodes.
inline std::vector<EndoMap> enumerate_projections(const FiniteMonoid& m, ProjectionKind kind,
                                                  std::size_t guard = kDefaultProjectionGuard) {
  const std::size_t n = m.size();
  std::vector<std::size_t> below_count(n, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (m.le(b, a)) ++below_count[a];
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return below_count[x] < below_count[y]; });
  std::vector<std::vector<Index>> candidates(n);
  for (Index x = 0; x < n; ++x)
    for (Index v = 0; v < n; ++v)
      if (m.le(v, x)) candidates[x].push_back(v);

  std::vector<Index> img(n, n);
  std::vector<bool> assigned(n, false);
  std::vector<EndoMap> out;
  std::size_t nodes = 0;

  auto admissible = [&](Index x, Index v) {
    for (Index y = 0; y < n; ++y) {
      if (!assigned[y]) continue;
      if (m.le(y, x) && !m.le(img[y], v)) return false;
      if (m.le(x, y) && !m.le(v, img[y])) return false;
    }
    if (kind == ProjectionKind::order) {
      for (Index y = 0; y < n; ++y) {
        if (!assigned[y] && y != x) continue;
        Index py = (y == x) ? v : img[y];
        if (m.ge(py, x) && v != x) return false;
        if (m.ge(v, y) && py != y) return false;
      }
    } else {
      for (Index f = 0; f < n; ++f) {
        Index fx = m.mul(f, x);
        Index qfx = (fx == x) ? v : img[fx];
        if (fx != x && !assigned[fx]) continue;
        if (!m.le(m.mul(f, v), qfx)) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (++nodes > guard) throw GuardExceeded("projection enumeration exceeds guard " + std::to_string(guard));
    if (pos == n) {
      out.emplace_back(img);
      return;
    }
    Index x = order[pos];
    for (Index v : candidates[x]) {
      if (!admissible(x, v)) continue;
      img[x] = v;
      assigned[x] = true;
      self(self, pos + 1);
      assigned[x] = false;
      img[x] = n;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Order projections under composition, ordered pointwise.
struct ProjectionMonoid {
  std::vector<EndoMap> maps;
  FiniteMonoid monoid;
  AxiomReport axioms;
  bool idempotent = false;
  bool unit_is_identity = false;
  bool zero_is_constant = false;
};

inline ProjectionMonoid proj_monoid(const FiniteMonoid& m, std::size_t guard = kDefaultProjectionGuard) {
  auto maps = enumerate_projections(m, ProjectionKind::order, guard);
  const std::size_t k = maps.size();
  std::map<EndoMap, Index> index;
  for (Index i = 0; i < k; ++i) index.emplace(maps[i], i);
  std::vector<std::vector<Index>> op(k, std::vector<Index>(k));
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  std::vector<std::string> names;
  for (Index a = 0; a < k; ++a) {
    std::string label = "P[";
    for (Index f = 0; f < m.size(); ++f) label += (f ? "," : "") + std::to_string(maps[a](f));
    names.push_back(label + "]");
    for (Index b = 0; b < k; ++b) {
      auto it = index.find(maps[a].after(maps[b]));
      if (it == index.end())
        throw CertificateFailure("composition of order projections " + std::to_string(a) + " and " + std::to_string(b) +
                                 " is not an order projection");
      op[a][b] = it->second;
      bool le = true;
      for (Index f = 0; f < m.size() && le; ++f) le = m.le(maps[a](f), maps[b](f));
      leq[a][b] = le;
    }
  }
  EndoMap id = EndoMap::identity(m.size());
  EndoMap zero = EndoMap::constant(m.size(), m.zero());
  auto id_it = index.find(id);
  auto zero_it = index.find(zero);
  if (id_it == index.end() || zero_it == index.end())
    throw CertificateFailure("identity or constant-zero map missing from order projections");
  FiniteMonoid pm(std::move(names), op, leq, id_it->second, zero_it->second);
  ProjectionMonoid out{maps, pm, verify_axioms(pm), structural_predicates(pm).idempotent, false, false};
  out.unit_is_identity = true;
  out.zero_is_constant = true;
  for (Index a = 0; a < k; ++a) {
    if (op[id_it->second][a] != a) out.unit_is_identity = false;
    if (!leq[zero_it->second][a]) out.zero_is_constant = false;
  }
  return out;
}

/// x*(P): f ↦ P(fx)
inline EndoMap star_map(const FiniteMonoid& m, Index x, const EndoMap& p) {
  if (x >= m.size()) throw StructuralError("element out of range");
  if (auto c = is_order_projection(m, p); !c) throw DomainError("star map requires an order projection (" + c.law + ")");
  std::vector<Index> img(m.size());
  for (Index f = 0; f < m.size(); ++f) img[f] = p(m.mul(f, x));
  return EndoMap(std::move(img));
}

/// I* = {Q ∈ Proj : Q[M] ⊆ I}, as indices into proj.maps.
struct IdealStar {
  std::vector<Index> members;
  std::vector<EndoMap> maps;
};

inline IdealStar ideal_star(const FiniteMonoid& m, const ElementSubset& ideal, const ProjectionMonoid& proj) {
  if (!is_order_ideal(m, ideal)) throw DomainError("I* requires an order ideal");
  IdealStar out;
  std::vector<bool> in(proj.maps.size(), false);
  for (Index i = 0; i < proj.maps.size(); ++i)
    if (proj.maps[i].range(m.size()).is_subset_of(ideal)) {
      out.members.push_back(i);
      out.maps.push_back(proj.maps[i]);
      in[i] = true;
    }
  for (Index q : out.members)
    for (Index r = 0; r < proj.maps.size(); ++r)
      if (!in[proj.monoid.mul(q, r)] || !in[proj.monoid.mul(r, q)])
        throw CertificateFailure("I* is not an ideal of the projection monoid");
  return out;
}

inline IdealStar ideal_star(const FiniteMonoid& m, const ElementSubset& ideal,
                            std::size_t guard = kDefaultProjectionGuard) {
  return ideal_star(m, ideal, proj_monoid(m, guard));
}

struct DedekindResult {
  std::optional<EndoMap> projection;
  std::optional<Index> witness;  ///< f with no greatest element in I ∩ I(f)
};

/// The order projection onto a Dedekind ideal, or the failing element.
inline DedekindResult dedekind_projection(const FiniteMonoid& m, const ElementSubset& ideal) {
  IdealSubset c = classify(m, ideal);
  if (!c.flags.order_ideal) throw DomainError("Dedekind projection requires an order ideal");
  if (!c.flags.dedekind) return {std::nullopt, c.dedekind_witness};
  const EndoMap& p = *c.projection;
  if (!is_order_projection(m, p) || p.range(m.size()) != ideal)
    throw CertificateFailure("Dedekind ideal does not yield an order projection onto itself");
  return {p, std::nullopt};
}

}  // namespace pom

#endif  // POM_PROJECTIONS_HPP
