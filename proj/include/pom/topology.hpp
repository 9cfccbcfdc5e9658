#ifndef POM_TOPOLOGY_HPP
#define POM_TOPOLOGY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pom/projections.hpp"

namespace pom {

/// A topology on the elements of a finite monoid, stored as its open sets.
class FiniteTopology {
 public:
  FiniteTopology(std::size_t n, std::vector<ElementSubset> opens) : n_(n), opens_(std::move(opens)) {
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    neighbourhood_.assign(n_, ElementSubset::full(n_));
    for (const auto& u : opens_) {
      if (u.universe() != n_) throw StructuralError("open set universe does not match ground set");
      for (Index x : u.indices()) neighbourhood_[x] = neighbourhood_[x] & u;
    }
  }

  std::size_t ground_size() const { return n_; }
  const std::vector<ElementSubset>& opens() const { return opens_; }

  /// Smallest open set containing x.
  const ElementSubset& neighbourhood(Index x) const { return neighbourhood_[x]; }

  bool is_open(const ElementSubset& s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }
  bool is_closed(const ElementSubset& s) const { return is_open(s.complement()); }

  /// Contains ∅ and the whole set and is closed under unions and intersections.
  ///
  /// Every open set is an up-set of the specialization preorder, so the family
  /// is a topology iff it holds each minimal neighbourhood and has as many
  /// members as that preorder has up-sets.
  bool is_topology() const {
    if (!is_open(ElementSubset(n_)) || !is_open(ElementSubset::full(n_))) return false;
    for (Index x = 0; x < n_; ++x)
      if (!is_open(neighbourhood_[x])) return false;
    std::vector<Index> reps;
    for (Index x = 0; x < n_; ++x)
      if (std::none_of(reps.begin(), reps.end(), [&](Index r) { return neighbourhood_[r] == neighbourhood_[x]; }))
        reps.push_back(x);
    auto below = [&](Index a, Index b) { return neighbourhood_[reps[b]].contains(reps[a]); };
    try {
      return enumerate_down_sets(reps.size(), below, opens_.size()).size() == opens_.size();
    } catch (const GuardExceeded&) {
      return false;
    }
  }

  /// Distinct points are separated by some open set.
  bool is_t0() const {
    for (Index x = 0; x < n_; ++x)
      for (Index y = x + 1; y < n_; ++y)
        if (neighbourhood_[x].contains(y) && neighbourhood_[y].contains(x)) return false;
    return true;
  }

  /// x ⊑ y iff every open set containing x contains y.
  bool specializes(Index x, Index y) const { return neighbourhood_[x].contains(y); }

 private:
  std::size_t n_;
  std::vector<ElementSubset> opens_;
  std::vector<ElementSubset> neighbourhood_;
};

/// The smallest topology containing the given sets: the up-sets of the
/// specialization preorder they induce.
inline FiniteTopology topology_generated_by(std::size_t n, const std::vector<ElementSubset>& generators,
                                            std::size_t limit = kDefaultIdealLimit) {
  std::vector<ElementSubset> nb(n, ElementSubset::full(n));
  for (const auto& g : generators)
    for (Index x : g.indices()) nb[x] = nb[x] & g;
  // Collapse points with identical neighbourhoods, then enumerate up-sets.
  std::vector<Index> rep(n);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    rep[x] = x;
    for (Index r : reps)
      if (nb[r] == nb[x]) {
        rep[x] = r;
        break;
      }
    if (rep[x] == x) reps.push_back(x);
  }
  const std::size_t k = reps.size();
  // up-set of ⊑ on representatives == down-set of the reversed relation
  auto below = [&](Index a, Index b) { return nb[reps[b]].contains(reps[a]); };
  std::vector<ElementSubset> opens;
  for (const auto& s : enumerate_down_sets(k, below, limit)) {
    ElementSubset u(n);
    for (Index x = 0; x < n; ++x) {
      for (Index i = 0; i < k; ++i)
        if (reps[i] == rep[x] && s.contains(i)) u.insert(x);
    }
    opens.push_back(std::move(u));
  }
  return FiniteTopology(n, std::move(opens));
}

struct ContinuityCheck {
  bool ok = true;
  std::optional<ElementSubset> witness;  ///< an open set whose preimage is not open
};

inline ContinuityCheck is_continuous(const EndoMap& fmap, const FiniteTopology& tau) {
  if (fmap.size() != tau.ground_size()) throw StructuralError("map size does not match the topology");
  for (const auto& u : tau.opens()) {
    ElementSubset pre(tau.ground_size());
    for (Index f = 0; f < fmap.size(); ++f)
      if (u.contains(fmap(f))) pre.insert(f);
    if (!tau.is_open(pre)) return {false, u};
  }
  return {};
}

/// Composition M×M → M is continuous for the product topology.
inline bool composition_continuous(const FiniteMonoid& m, const FiniteTopology& tau) {
  const std::size_t n = m.size();
  for (const auto& u : tau.opens()) {
    // The preimage is open in the product iff it is closed under moving
    // either coordinate up the specialization preorder.
    for (Index f = 0; f < n; ++f)
      for (Index g = 0; g < n; ++g) {
        if (!u.contains(m.mul(f, g))) continue;
        for (Index x : tau.neighbourhood(f).indices())
          if (!u.contains(m.mul(x, g))) return false;
        for (Index y : tau.neighbourhood(g).indices())
          if (!u.contains(m.mul(f, y))) return false;
      }
  }
  return true;
}

struct TopologyReport {
  bool is_topology = false;
  bool generators_form_topology = false;  ///< the generating complements alone are already closed under ∪, ∩
  bool t0 = false;
  bool composition_continuous = false;
  bool perp_closed = true;               ///< every T⊥ is closed (order topology; prime topology of an integral domain)
  bool projections_continuous = true;    ///< prime topology: every Q ∈ SProj continuous
  bool preimages_prime = true;           ///< prime topology: Q⁻¹(I) order prime for every order prime I
  std::size_t projections_checked = 0;
};

struct TopologyResult {
  FiniteTopology topology;
  TopologyReport report;
};

namespace detail {

inline bool all_perps_closed(const FiniteMonoid& m, const FiniteTopology& tau) {
  const std::size_t n = m.size();
  if (n <= 12) {
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask)
      if (!tau.is_closed(perp(m, ElementSubset::from_mask(n, mask)))) return false;
    return true;
  }
  // T⊥ is the intersection of the {h}⊥ and closed sets are closed under intersection.
  for (Index h = 0; h < n; ++h)
    if (!tau.is_closed(perp(m, ElementSubset::of(n, {h})))) return false;
  return tau.is_topology();
}

inline bool family_closed(const std::vector<ElementSubset>& sets) {
  std::set<ElementSubset> s(sets.begin(), sets.end());
  for (const auto& a : sets)
    for (const auto& b : sets)
      if (!s.count(a | b) || !s.count(a & b)) return false;
  return true;
}

}  // namespace detail

/// Closed sets are the order ideals.
inline TopologyResult order_topology(const FiniteMonoid& m, std::size_t limit = kDefaultIdealLimit) {
  std::vector<ElementSubset> opens;
  for (const auto& i : enumerate_ideals(m, IdealKind::order, limit)) opens.push_back(i.members.complement());
  FiniteTopology tau(m.size(), opens);
  TopologyReport r;
  r.is_topology = tau.is_topology();
  r.generators_form_topology = r.is_topology;
  r.t0 = tau.is_t0();
  r.composition_continuous = composition_continuous(m, tau);
  r.perp_closed = detail::all_perps_closed(m, tau);
  return {std::move(tau), r};
}

/// The smallest topology containing the complement of every order prime ideal.
inline TopologyResult prime_topology(const FiniteMonoid& m, std::size_t guard = kDefaultProjectionGuard,
                                     std::size_t limit = kDefaultIdealLimit) {
  auto primes = enumerate_ideals(m, IdealKind::order_prime, limit);
  std::vector<ElementSubset> gens;
  gens.push_back(ElementSubset(m.size()));
  gens.push_back(ElementSubset::full(m.size()));
  for (const auto& p : primes) gens.push_back(p.members.complement());
  FiniteTopology tau = topology_generated_by(m.size(), gens, limit);
  TopologyReport r;
  r.is_topology = tau.is_topology();
  r.generators_form_topology = detail::family_closed(gens);
  r.t0 = tau.is_t0();
  r.composition_continuous = composition_continuous(m, tau);
  // Only claimed for integral domains ({0} prime).
  if (is_prime_set(m, ElementSubset::of(m.size(), {m.zero()}))) r.perp_closed = detail::all_perps_closed(m, tau);
  for (const auto& q : enumerate_projections(m, ProjectionKind::monoid, guard)) {
    ++r.projections_checked;
    if (!is_continuous(q, tau).ok) r.projections_continuous = false;
    for (const auto& p : primes) {
      ElementSubset pre(m.size());
      for (Index f = 0; f < m.size(); ++f)
        if (p.members.contains(q(f))) pre.insert(f);
      if (!is_order_ideal(m, pre) || !is_prime_set(m, pre) || !is_monoid_ideal(m, pre)) r.preimages_prime = false;
    }
  }
  return {std::move(tau), r};
}

/// Graphviz rendering of the covering pairs of the specialization order,
/// one `->` edge from the larger to the smaller element of each pair.
inline std::string specialization_dot(const FiniteMonoid& m, const FiniteTopology& tau) {
  const std::size_t n = m.size();
  auto strictly = [&](Index lo, Index hi) { return tau.specializes(lo, hi) && !tau.specializes(hi, lo); };
  std::string out = "digraph specialization {\n";
  for (Index x = 0; x < n; ++x) out += "  \"" + m.name(x) + "\";\n";
  for (Index hi = 0; hi < n; ++hi)
    for (Index lo = 0; lo < n; ++lo) {
      if (!strictly(lo, hi)) continue;
      bool covers = true;
      for (Index z = 0; z < n && covers; ++z)
        if (strictly(lo, z) && strictly(z, hi)) covers = false;
      if (covers) out += "  \"" + m.name(hi) + "\" -> \"" + m.name(lo) + "\";\n";
    }
  return out + "}\n";
}

}  // namespace pom

#endif  // POM_TOPOLOGY_HPP
