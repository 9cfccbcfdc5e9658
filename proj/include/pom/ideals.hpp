#ifndef POM_IDEALS_HPP
#define POM_IDEALS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pom/endomap.hpp"
#include "pom/monoid.hpp"

namespace pom {

struct IdealFlags {
  bool monoid_ideal = false;
  bool order_ideal = false;
  bool radical = false;
  bool prime = false;
  bool dedekind = false;

  bool operator==(const IdealFlags&) const = default;
};

/// A subset of a monoid together with its classification.
///
/// `radical` and `prime` are only set for monoid ideals; `dedekind` only for
/// order ideals. When `dedekind` holds, `projection` maps f to the greatest
/// element of I ∩ I(f); otherwise `dedekind_witness` names the first f for
/// which that set has no greatest element.
struct IdealSubset {
  ElementSubset members;
  IdealFlags flags;
  std::optional<EndoMap> projection;
  std::optional<Index> dedekind_witness;

  bool contains(Index f) const { return members.contains(f); }
  std::vector<Index> indices() const { return members.indices(); }
};

inline bool is_monoid_ideal(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f : s.indices())
    for (Index g = 0; g < m.size(); ++g)
      if (!s.contains(m.mul(f, g))) return false;
  return true;
}

inline bool is_order_ideal(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f : s.indices())
    for (Index g = 0; g < m.size(); ++g)
      if (m.ge(f, g) && !s.contains(g)) return false;
  return true;
}

/// fg ∈ S implies f ∈ S or g ∈ S (including f = g).
inline bool is_prime_set(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = f; g < m.size(); ++g)
      if (s.contains(m.mul(f, g)) && !s.contains(f) && !s.contains(g)) return false;
  return true;
}

/// f^n ∈ S for some n ≥ 1 implies f ∈ S.
inline bool is_power_closed(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f = 0; f < m.size(); ++f) {
    if (s.contains(f)) continue;
    for (Index p : power_orbit(m, f))
      if (s.contains(p)) return false;
  }
  return true;
}

/// Greatest element of I ∩ I(f), if any.
inline std::optional<Index> greatest_below(const FiniteMonoid& m, const ElementSubset& s, Index f) {
  std::vector<Index> trace;
  for (Index g : s.indices())
    if (m.le(g, f)) trace.push_back(g);
  for (Index cand : trace) {
    bool top = true;
    for (Index g : trace)
      if (!m.ge(cand, g)) {
        top = false;
        break;
      }
    if (top) return cand;
  }
  return std::nullopt;
}

inline IdealSubset classify(const FiniteMonoid& m, const ElementSubset& s) {
  if (s.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
  IdealSubset out{s, {}, std::nullopt, std::nullopt};
  out.flags.monoid_ideal = is_monoid_ideal(m, s);
  out.flags.order_ideal = is_order_ideal(m, s);
  if (out.flags.monoid_ideal) {
    out.flags.radical = is_power_closed(m, s);
    out.flags.prime = is_prime_set(m, s);
  }
  if (out.flags.order_ideal) {
    std::vector<Index> img(m.size());
    bool ok = true;
    for (Index f = 0; f < m.size() && ok; ++f) {
      auto g = greatest_below(m, s, f);
      if (!g) {
        ok = false;
        out.dedekind_witness = f;
      } else {
        img[f] = *g;
      }
    }
    out.flags.dedekind = ok;
    if (ok) out.projection = EndoMap(std::move(img));
  }
  return out;
}

/// I(A): everything below some element of A.
inline IdealSubset order_ideal_generated(const FiniteMonoid& m, const ElementSubset& a) {
  ElementSubset out(m.size());
  for (Index f : a.indices())
    for (Index g = 0; g < m.size(); ++g)
      if (m.le(g, f)) out.insert(g);
  return classify(m, out);
}

inline ElementSubset radical_set(const FiniteMonoid& m, const ElementSubset& i) {
  ElementSubset out(m.size());
  for (Index f = 0; f < m.size(); ++f)
    for (Index p : power_orbit(m, f))
      if (i.contains(p)) {
        out.insert(f);
        break;
      }
  return out;
}

/// √I = {f : f^n ∈ I for some n}. Requires a monoid ideal.
inline IdealSubset radical_of(const FiniteMonoid& m, const ElementSubset& i) {
  if (i.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
  if (!is_monoid_ideal(m, i)) throw DomainError("radical requires a monoid ideal");
  return classify(m, radical_set(m, i));
}

enum class IdealKind { order, monoid, prime, radical, order_prime, order_radical, dedekind };

inline std::optional<IdealKind> parse_ideal_kind(const std::string& s) {
  if (s == "order") return IdealKind::order;
  if (s == "monoid") return IdealKind::monoid;
  if (s == "prime") return IdealKind::prime;
  if (s == "radical") return IdealKind::radical;
  if (s == "order-prime") return IdealKind::order_prime;
  if (s == "order-radical") return IdealKind::order_radical;
  if (s == "dedekind") return IdealKind::dedekind;
  return std::nullopt;
}

/// All down-sets of the relation `below(a, b)` (a ≤ b), which must be a
/// partial order. Canonically ordered.
inline std::vector<ElementSubset> enumerate_down_sets(std::size_t n, const std::function<bool(Index, Index)>& below,
                                                      std::size_t limit) {
  std::vector<std::vector<Index>> strictly_below(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b && below(a, b)) strictly_below[b].push_back(a);
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return strictly_below[x].size() < strictly_below[y].size(); });

  std::vector<ElementSubset> out;
  ElementSubset cur(n);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (out.size() >= limit) throw GuardExceeded("ideal enumeration exceeds limit " + std::to_string(limit));
      out.push_back(cur);
      return;
    }
    Index x = order[pos];
    self(self, pos + 1);
    bool can = true;
    for (Index y : strictly_below[x])
      if (!cur.contains(y)) {
        can = false;
        break;
      }
    if (can) {
      cur.insert(x);
      self(self, pos + 1);
      cur.erase(x);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr std::size_t kDefaultIdealLimit = 1'000'000;

/// All ideals of the requested kind, canonically ordered.
///
/// Order ideals are the down-sets of the order; monoid ideals are the
/// down-sets of divisibility. The remaining kinds are filters of these.
inline std::vector<IdealSubset> enumerate_ideals(const FiniteMonoid& m, IdealKind kind,
                                                 std::size_t limit = kDefaultIdealLimit) {
  const bool order_based = kind == IdealKind::order || kind == IdealKind::order_prime ||
                           kind == IdealKind::order_radical || kind == IdealKind::dedekind;
  std::vector<ElementSubset> sets;
  if (order_based) {
    sets = enumerate_down_sets(m.size(), [&](Index a, Index b) { return m.le(a, b); }, limit);
  } else {
    // divides[b][a]: b divides a
    std::vector<std::vector<bool>> divides(m.size(), std::vector<bool>(m.size(), false));
    for (Index b = 0; b < m.size(); ++b)
      for (Index h = 0; h < m.size(); ++h) divides[b][m.mul(b, h)] = true;
    sets = enumerate_down_sets(m.size(), [&](Index a, Index b) { return divides[b][a]; }, limit);
  }
  std::vector<IdealSubset> out;
  for (auto& s : sets) {
    IdealSubset c = classify(m, s);
    bool keep = false;
    switch (kind) {
      case IdealKind::order: keep = c.flags.order_ideal; break;
      case IdealKind::monoid: keep = c.flags.monoid_ideal; break;
      case IdealKind::prime: keep = c.flags.prime; break;
      case IdealKind::radical: keep = c.flags.radical; break;
      case IdealKind::order_prime: keep = c.flags.order_ideal && c.flags.prime; break;
      case IdealKind::order_radical: keep = c.flags.order_ideal && c.flags.radical; break;
      case IdealKind::dedekind: keep = c.flags.dedekind; break;
    }
    if (keep) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pom

#endif  // POM_IDEALS_HPP
