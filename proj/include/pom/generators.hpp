#ifndef POM_GENERATORS_HPP
#define POM_GENERATORS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "pom/monoid.hpp"

namespace pom {

/// {0 < 1 < ... < n-1} under min; the top n-1 is the unit.
inline FiniteMonoid chain(std::size_t n, std::size_t guard = kDefaultSizeGuard) {
  if (n == 0) throw DomainError("chain length must be positive");
  if (n > guard) throw GuardExceeded("chain exceeds size guard " + std::to_string(guard));
  std::vector<std::string> names;
  std::vector<std::vector<Index>> op(n, std::vector<Index>(n));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (Index b = 0; b < n; ++b) {
      op[a][b] = std::min(a, b);
      leq[a][b] = a <= b;
    }
  }
  return FiniteMonoid(std::move(names), op, leq, n - 1, 0);
}

namespace detail {
inline std::string atom_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}
}  // namespace detail

/// Subsets of k atoms under intersection; element index = bit mask of atoms.
/// A >= B iff B is contained in A; the full set is the unit, the empty set 0.
inline FiniteMonoid boolean_algebra(std::size_t k, std::size_t guard = kDefaultSizeGuard) {
  if (k == 0) throw DomainError("boolean algebra needs at least one atom");
  if (k >= 63 || (std::size_t{1} << k) > guard) throw GuardExceeded("boolean algebra exceeds size guard " + std::to_string(guard));
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  std::vector<std::vector<Index>> op(n, std::vector<Index>(n));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i)
      if ((a >> i) & 1U) {
        if (!first) s += ",";
        s += detail::atom_name(i);
        first = false;
      }
    names.push_back(s + "}");
    for (Index b = 0; b < n; ++b) {
      op[a][b] = a & b;
      leq[a][b] = (a & b) == a;
    }
  }
  return FiniteMonoid(std::move(names), op, leq, n - 1, 0);
}

namespace detail {

inline FiniteMonoid vector_monoid(std::size_t dims, std::size_t top, std::size_t guard, bool capped_sum) {
  if (dims == 0 || top == 0) throw DomainError("dimension and bound must be positive");
  const std::size_t base = top + 1;
  const std::size_t n = checked_power(base, dims, guard, capped_sum ? "capped exponent monoid" : "grid monoid");
  std::vector<std::vector<Index>> digs(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    digs[i] = digits(i, base, dims);
    std::vector<std::string> parts;
    for (Index x : digs[i]) parts.push_back(std::to_string(x));
    names[i] = tuple_label(parts);
  }
  std::vector<std::vector<Index>> op(n, std::vector<Index>(n));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<Index> buf(dims);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < dims; ++i) {
        if (capped_sum) {
          buf[i] = std::min(digs[a][i] + digs[b][i], top);
          le = le && digs[a][i] >= digs[b][i];  // a <= b iff b divides a
        } else {
          buf[i] = std::min(digs[a][i], digs[b][i]);
          le = le && digs[a][i] <= digs[b][i];
        }
      }
      op[a][b] = undigits(buf, base);
      leq[a][b] = le;
    }
  if (capped_sum) return FiniteMonoid(std::move(names), op, leq, 0, n - 1);
  return FiniteMonoid(std::move(names), op, leq, n - 1, 0);
}

}  // namespace detail

/// Exponent vectors in {0..cap}^N under coordinatewise capped addition with
/// the divisibility order: unit (0,...,0), zero (cap,...,cap).
inline FiniteMonoid capped_exponent(std::size_t n, std::size_t cap, std::size_t guard = kDefaultSizeGuard) {
  return detail::vector_monoid(n, cap, guard, true);
}

/// {0..L}^d under coordinatewise min; the top (L,...,L) is the unit.
inline FiniteMonoid grid(std::size_t d, std::size_t l, std::size_t guard = kDefaultSizeGuard) {
  return detail::vector_monoid(d, l, guard, false);
}

}  // namespace pom

#endif  // POM_GENERATORS_HPP
