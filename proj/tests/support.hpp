// Test catalog and brute-force oracles. The oracles deliberately avoid the
// library's own predicates so they can serve as independent checks.
#ifndef POM_TESTS_SUPPORT_HPP
#define POM_TESTS_SUPPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pom/generators.hpp"
#include "pom/monoid.hpp"

namespace pom {

inline void PrintTo(const ElementSubset& s, std::ostream* os) {
  *os << "{";
  bool first = true;
  for (Index i : s.indices()) {
    *os << (first ? "" : ",") << i;
    first = false;
  }
  *os << "}";
}

}  // namespace pom

namespace pomtest {

using pom::ElementSubset;
using pom::FiniteMonoid;
using pom::Index;

struct Named {
  std::string name;
  FiniteMonoid m;
};

/// {0, x, y, 1}: every product of non-units is 0, order 0 < x < y < 1.
inline FiniteMonoid null_chain() {
  std::vector<std::vector<Index>> op(4, std::vector<Index>(4, 0));
  for (Index a = 0; a < 4; ++a) {
    op[3][a] = a;
    op[a][3] = a;
  }
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (Index a = 0; a < 4; ++a)
    for (Index b = a; b < 4; ++b) leq[a][b] = true;
  return FiniteMonoid({"0", "x", "y", "1"}, op, leq, 3, 0);
}

inline std::vector<Named> catalog() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({"C(" + std::to_string(n) + ")", pom::chain(n)});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"B(" + std::to_string(k) + ")", pom::boolean_algebra(k)});
  for (auto [n, c] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}})
    out.push_back({"E(" + std::to_string(n) + "," + std::to_string(c) + ")", pom::capped_exponent(n, c)});
  for (auto [d, l] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
    out.push_back({"G(" + std::to_string(d) + "," + std::to_string(l) + ")", pom::grid(d, l)});
  out.push_back({"N4", null_chain()});
  out.push_back({"C(2)^2", pom::product_monoid(pom::chain(2), 2)});
  out.push_back({"C(3)^2", pom::product_monoid(pom::chain(3), 2)});
  out.push_back({"E(1,2)^2", pom::product_monoid(pom::capped_exponent(1, 2), 2)});
  out.push_back({"W(C(2),2)", pom::embed_points(pom::chain(2), 2).monoid});
  out.push_back({"W(B(2),2)", pom::embed_points(pom::boolean_algebra(2), 2).monoid});
  return out;
}

inline std::vector<Named> catalog_up_to(std::size_t n) {
  std::vector<Named> out;
  for (auto& c : catalog())
    if (c.m.size() <= n) out.push_back(std::move(c));
  return out;
}

inline std::vector<ElementSubset> all_subsets(std::size_t n) {
  std::vector<ElementSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(ElementSubset::from_mask(n, mask));
  return out;
}

// --- oracles -------------------------------------------------------------

/// Downward closed: f ∈ S and g ≤ f give g ∈ S.
inline bool oracle_down(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (s.contains(f) && m.le(g, f) && !s.contains(g)) return false;
  return true;
}

inline bool oracle_absorbing(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (s.contains(f) && !s.contains(m.mul(f, g))) return false;
  return true;
}

inline bool oracle_prime(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (s.contains(m.mul(f, g)) && !s.contains(f) && !s.contains(g)) return false;
  return true;
}

inline bool oracle_radical(const FiniteMonoid& m, const ElementSubset& s) {
  for (Index f = 0; f < m.size(); ++f) {
    Index p = f;
    for (std::size_t k = 0; k <= m.size(); ++k) {
      if (s.contains(p) && !s.contains(f)) return false;
      p = m.mul(p, f);
    }
  }
  return true;
}

/// 1 + largest subset of T \ I with all pairwise products in I, by scanning
/// every subset.
inline std::size_t oracle_kappa(const FiniteMonoid& m, const ElementSubset& t, const ElementSubset& ideal) {
  std::vector<Index> v;
  for (Index f = 0; f < m.size(); ++f)
    if (t.contains(f) && !ideal.contains(f)) v.push_back(f);
  std::size_t best = 0;
  const std::size_t k = v.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const std::size_t c = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (c <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = a + 1; b < k && ok; ++b)
        if (((mask >> a) & 1U) && ((mask >> b) & 1U) && !ideal.contains(m.mul(v[a], v[b]))) ok = false;
    if (ok) best = c;
  }
  return best + 1;
}

inline bool oracle_monotone(const FiniteMonoid& m, const std::vector<Index>& p) {
  for (Index f = 0; f < m.size(); ++f)
    for (Index g = 0; g < m.size(); ++g)
      if (m.le(g, f) && !m.le(p[g], p[f])) return false;
  return true;
}

inline bool oracle_order_projection(const FiniteMonoid& m, const std::vector<Index>& p) {
  if (!oracle_monotone(m, p)) return false;
  for (Index f = 0; f < m.size(); ++f) {
    if (!m.le(p[f], f)) return false;
    for (Index g = 0; g < m.size(); ++g)
      if (m.le(g, p[f]) && p[g] != g) return false;
  }
  return true;
}

inline bool oracle_monoid_projection(const FiniteMonoid& m, const std::vector<Index>& q) {
  if (!oracle_monotone(m, q)) return false;
  for (Index f = 0; f < m.size(); ++f) {
    if (!m.le(q[f], f)) return false;
    for (Index g = 0; g < m.size(); ++g)
      if (!m.le(m.mul(f, q[g]), q[m.mul(f, g)])) return false;
  }
  return true;
}

/// Calls fn on every self-map of an n-element set.
template <class Fn>
void for_each_map(std::size_t n, Fn&& fn) {
  std::vector<Index> img(n, 0);
  for (;;) {
    fn(img);
    std::size_t i = 0;
    while (i < n && ++img[i] == n) img[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace pomtest

#endif  // POM_TESTS_SUPPORT_HPP
