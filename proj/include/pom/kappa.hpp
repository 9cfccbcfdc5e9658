#ifndef POM_KAPPA_HPP
#define POM_KAPPA_HPP

#include <algorithm>
#include <vector>

#include "pom/clique.hpp"
#include "pom/ideals.hpp"
#include "pom/quotient.hpp"

namespace pom {

/// Vertices are the elements of T \ I; f ~ g iff f ≠ g and fg ∈ I.
/// Mutually I-disjoint subsets of T are exactly the cliques.
struct DisjointnessGraph {
  std::vector<Index> vertices;
  std::vector<CliqueSolver::VertexSet> adjacency;

  DisjointnessGraph(const FiniteMonoid& m, const ElementSubset& t, const ElementSubset& ideal) {
    for (Index f : t.indices())
      if (!ideal.contains(f)) vertices.push_back(f);
    const std::size_t k = vertices.size();
    adjacency.assign(k, CliqueSolver::VertexSet(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (ideal.contains(m.mul(vertices[a], vertices[b]))) {
          adjacency[a].set(b);
          adjacency[b].set(a);
        }
  }
};

/// κ(T, I): one more than the size of a largest mutually I-disjoint subset of T.
struct KappaValue {
  std::size_t k = 1;
  std::vector<Index> witness;  ///< lexicographically least maximum antichain
};

inline KappaValue kappa(const FiniteMonoid& m, const ElementSubset& t, const ElementSubset& ideal) {
  if (t.universe() != m.size() || ideal.universe() != m.size())
    throw StructuralError("subset universe does not match monoid size");
  if (!is_monoid_ideal(m, ideal)) throw DomainError("kappa requires an ideal");
  DisjointnessGraph g(m, t, ideal);
  CliqueSolver solver(g.adjacency);
  KappaValue out;
  for (std::size_t v : solver.lex_least_maximum_clique()) out.witness.push_back(g.vertices[v]);
  out.k = out.witness.size() + 1;
  return out;
}

/// κ(T) = κ(T, {0})
inline KappaValue kappa(const FiniteMonoid& m, const ElementSubset& t) {
  return kappa(m, t, ElementSubset::of(m.size(), {m.zero()}));
}

inline void require_radical_order_ideal(const FiniteMonoid& m, const ElementSubset& ideal, const char* who) {
  if (ideal.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
  if (!is_order_ideal(m, ideal) || !is_monoid_ideal(m, ideal) || !is_power_closed(m, ideal))
    throw DomainError(std::string(who) + " requires a radical order ideal");
}

struct ErdosTarskiResult {
  std::size_t kappa_ti = 0;        ///< κ(T, I) in M
  std::size_t kappa_quotient = 0;  ///< κ(T/I) in M/I
  bool equal = false;
};

/// Both sides of κ(T, I) = κ(T/I), from clique searches on different graphs.
/// I must be a nonempty radical order ideal.
inline ErdosTarskiResult erdos_tarski_check(const FiniteMonoid& m, const ElementSubset& t, const ElementSubset& ideal) {
  require_radical_order_ideal(m, ideal, "Erdos-Tarski check");
  if (ideal.empty()) throw DomainError("Erdos-Tarski check requires a nonempty ideal (the quotient by the empty set has no zero class)");
  ErdosTarskiResult r;
  r.kappa_ti = kappa(m, t, ideal).k;
  QuotientMonoid q = quotient(m, ideal);
  ElementSubset classes(q.size());
  for (Index f : t.indices()) classes.insert(q.class_of[f]);
  r.kappa_quotient = kappa(q.monoid, classes, ElementSubset::of(q.size(), {q.monoid.zero()})).k;
  r.equal = r.kappa_ti == r.kappa_quotient;
  return r;
}

enum class FamilyMode { intersect, unite };

struct FamilyResult {
  IdealSubset result;
  std::size_t kappa_result = 1;      ///< κ(M, result)
  std::size_t max_kappa_inputs = 1;  ///< max over inputs of κ(M, I_α)
  std::size_t sum_bound = 1;         ///< 1 + Σ (κ(M, I_α) − 1)
  bool bound_ok = true;              ///< intersect: κ(M, I₀) ≤ sum_bound
};

inline FamilyResult family_ops(const FiniteMonoid& m, const std::vector<ElementSubset>& ideals, FamilyMode mode) {
  if (ideals.empty()) throw DomainError("family of ideals must be nonempty");
  ElementSubset acc = ideals.front();
  FamilyResult out{};
  const ElementSubset all = ElementSubset::full(m.size());
  for (const auto& i : ideals) {
    if (i.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
    if (!is_order_ideal(m, i)) throw DomainError("family members must be order ideals");
    acc = mode == FamilyMode::intersect ? (acc & i) : (acc | i);
    std::size_t k = kappa(m, all, i).k;
    out.max_kappa_inputs = std::max(out.max_kappa_inputs, k);
    out.sum_bound += k - 1;
  }
  out.result = classify(m, acc);
  out.kappa_result = kappa(m, all, acc).k;
  out.bound_ok = mode == FamilyMode::unite || out.kappa_result <= out.sum_bound;
  return out;
}

}  // namespace pom

#endif  // POM_KAPPA_HPP
