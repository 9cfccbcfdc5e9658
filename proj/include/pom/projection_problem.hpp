#ifndef POM_PROJECTION_PROBLEM_HPP
#define POM_PROJECTION_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "pom/kappa.hpp"
#include "pom/projections.hpp"

namespace pom {

using ProjectionFamily = std::vector<EndoMap>;

inline void require_monoid_projections(const FiniteMonoid& m, const ProjectionFamily& qfam) {
  for (Index i = 0; i < qfam.size(); ++i)
    if (auto c = is_monoid_projection(m, qfam[i]); !c)
      throw DomainError("family member " + std::to_string(i) + " is not a monoid projection (" + c.law + ")");
}

/// Q[T] = ⋃_{Q ∈ Qfam} Q[T]
inline ElementSubset family_image(const ProjectionFamily& qfam, const ElementSubset& t) {
  ElementSubset out(t.universe());
  for (const auto& q : qfam) out = out | q.apply(t);
  return out;
}

inline bool projects_into(const EndoMap& q, const ElementSubset& t, const ElementSubset& ideal) {
  for (Index f : t.indices())
    if (!ideal.contains(q(f))) return false;
  return true;
}

struct AntichainMember {
  Index projection;  ///< index into the family
  Index source;      ///< f ∈ T
  Index value;       ///< Q(f)
};

/// A reduced set T₀ ⊆ T that decides the projection problem for every member
/// of the family, with the certificate that was verified for it.
struct Reduction {
  ElementSubset t0;
  std::vector<AntichainMember> antichain;  ///< maximal mutually I-disjoint subset of Q[T]
  std::size_t kappa_bound = 1;             ///< κ(Q[T], I); |T₀| < kappa_bound
};

/// Greedy maximal mutually I-disjoint family in Q[T], scanned in ascending
/// (projection, element) order; T₀ collects the elements it came from.
/// Every claim of the reduction is re-verified and a failure raises
/// CertificateFailure.
inline Reduction reduce_set(const FiniteMonoid& m, const ElementSubset& t, const ProjectionFamily& qfam,
                            const ElementSubset& ideal) {
  if (t.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
  require_monoid_projections(m, qfam);
  require_radical_order_ideal(m, ideal, "reduce_set");

  Reduction r{ElementSubset(m.size()), {}, 1};
  for (Index qi = 0; qi < qfam.size(); ++qi)
    for (Index f : t.indices()) {
      Index v = qfam[qi](f);
      if (ideal.contains(v)) continue;
      bool disjoint = true;
      for (const auto& a : r.antichain)
        if (!ideal.contains(m.mul(v, a.value))) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      r.antichain.push_back({qi, f, v});
      r.t0.insert(f);
    }

  const ElementSubset image = family_image(qfam, t);
  r.kappa_bound = kappa(m, image, ideal).k;
  if (r.t0.count() >= r.kappa_bound)
    throw CertificateFailure("reduced set has " + std::to_string(r.t0.count()) + " elements, bound is " +
                             std::to_string(r.kappa_bound));
  for (Index qi = 0; qi < qfam.size(); ++qi)
    if (projects_into(qfam[qi], t, ideal) != projects_into(qfam[qi], r.t0, ideal))
      throw CertificateFailure("reduced set does not decide projection " + std::to_string(qi));
  const ElementSubset image0 = family_image(qfam, r.t0);
  for (Index h : image.indices()) {
    bool disjoint = true;
    for (Index x : image0.indices())
      if (!ideal.contains(m.mul(h, x))) {
        disjoint = false;
        break;
      }
    if (disjoint != ideal.contains(h))
      throw CertificateFailure("element " + m.name(h) + " breaks the disjointness characterisation");
  }
  return r;
}

/// First member of the family (in order) with Q[T] ⊆ I, decided on T₀ only.
inline std::optional<Index> solve_projection_problem(const FiniteMonoid& m, const ElementSubset& t,
                                                     const ProjectionFamily& qfam, const ElementSubset& ideal) {
  Reduction r = reduce_set(m, t, qfam, ideal);
  for (Index qi = 0; qi < qfam.size(); ++qi)
    if (projects_into(qfam[qi], r.t0, ideal)) return qi;
  return std::nullopt;
}

struct LocalSets {
  std::vector<Index> points;                 ///< elements of T, ascending
  std::vector<std::vector<Index>> sets;      ///< sets[i] = {Q : Q(points[i]) ∉ I}
  bool covers = false;
  std::vector<Index> subcover;               ///< elements of T₀ whose local sets cover (when covers)
  std::optional<Index> uncovered;            ///< a solution of the projection problem (when !covers)
  std::size_t kappa_bound = 1;
  // Counting skeleton: |Q₀| = |Q| − |⋃_{f∈T₀} Q(f;I)| and |⋃| ≤ Σ |Q(f;I)|.
  std::size_t solutions = 0;
  std::size_t union_size = 0;
  std::size_t sum_bound = 0;
};

inline LocalSets local_sets(const FiniteMonoid& m, const ElementSubset& t, const ProjectionFamily& qfam,
                            const ElementSubset& ideal) {
  Reduction r = reduce_set(m, t, qfam, ideal);
  LocalSets out;
  out.kappa_bound = r.kappa_bound;
  std::vector<bool> hit(qfam.size(), false);
  for (Index f : t.indices()) {
    out.points.push_back(f);
    std::vector<Index> s;
    for (Index qi = 0; qi < qfam.size(); ++qi)
      if (!ideal.contains(qfam[qi](f))) {
        s.push_back(qi);
        hit[qi] = true;
      }
    out.sets.push_back(std::move(s));
  }
  out.covers = true;
  for (Index qi = 0; qi < qfam.size(); ++qi)
    if (!hit[qi]) {
      out.covers = false;
      out.uncovered = qi;
      break;
    }

  std::vector<bool> hit0(qfam.size(), false);
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (!r.t0.contains(out.points[i])) continue;
    out.sum_bound += out.sets[i].size();
    for (Index qi : out.sets[i]) hit0[qi] = true;
  }
  for (Index qi = 0; qi < qfam.size(); ++qi) {
    if (hit0[qi]) ++out.union_size;
    if (projects_into(qfam[qi], t, ideal)) ++out.solutions;
  }
  if (out.solutions != qfam.size() - out.union_size || out.union_size > out.sum_bound)
    throw CertificateFailure("local-set counting identity failed");
  if (out.covers) {
    out.subcover = r.t0.indices();
    if (out.union_size != qfam.size()) throw CertificateFailure("reduced local sets do not cover the family");
    if (out.subcover.size() >= out.kappa_bound) throw CertificateFailure("subcover too large");
  }
  return out;
}

struct Piece {
  Index block;                ///< α
  Index point;                ///< f ∈ T₀
  std::vector<Index> members; ///< {Q : Q(f) ∈ block α}
};

struct PartitionDecomposition {
  std::vector<Index> solutions;  ///< Q₀
  std::vector<Piece> pieces;
  ElementSubset t0;
};

/// Splits the family into the solutions and the pieces {Q : Q(f) ∈ M_α}
/// for f ∈ T₀, given M = I ∪ ⋃ M_α with every M_α disjoint from I.
inline PartitionDecomposition partition_decompose(const FiniteMonoid& m, const ElementSubset& t,
                                                  const ProjectionFamily& qfam, const ElementSubset& ideal,
                                                  const std::vector<ElementSubset>& blocks) {
  ElementSubset cover = ideal;
  for (const auto& b : blocks) {
    if (b.universe() != m.size()) throw StructuralError("block universe does not match monoid size");
    if (!(b & ideal).empty()) throw DomainError("blocks must be disjoint from the ideal");
    cover = cover | b;
  }
  if (cover != ElementSubset::full(m.size())) throw DomainError("blocks and ideal do not cover the monoid");

  Reduction r = reduce_set(m, t, qfam, ideal);
  PartitionDecomposition out{{}, {}, r.t0};
  std::vector<bool> covered(qfam.size(), false);
  for (Index qi = 0; qi < qfam.size(); ++qi)
    if (projects_into(qfam[qi], t, ideal)) {
      out.solutions.push_back(qi);
      covered[qi] = true;
    }
  for (Index a = 0; a < blocks.size(); ++a)
    for (Index f : r.t0.indices()) {
      Piece p{a, f, {}};
      for (Index qi = 0; qi < qfam.size(); ++qi)
        if (blocks[a].contains(qfam[qi](f))) {
          p.members.push_back(qi);
          covered[qi] = true;
        }
      if (!p.members.empty()) out.pieces.push_back(std::move(p));
    }
  for (Index qi = 0; qi < qfam.size(); ++qi)
    if (!covered[qi]) throw CertificateFailure("partition pieces do not cover projection " + std::to_string(qi));
  return out;
}

}  // namespace pom

#endif  // POM_PROJECTION_PROBLEM_HPP
