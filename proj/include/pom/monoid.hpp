#ifndef POM_MONOID_HPP
#define POM_MONOID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pom/error.hpp"
#include "pom/subset.hpp"

namespace pom {

inline constexpr std::size_t kDefaultSizeGuard = 4096;

/// A finite positively ordered monoid given by explicit tables.
///
/// `mul(f, g)` is the composition fg. `le(g, f)` means g <= f, i.e. f >= g in
/// the orientation where the unit is the top element and `zero` the least.
/// Construction validates only the shape of the tables; whether the axioms
/// hold is decided by verify_axioms().
class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::string> elements, const std::vector<std::vector<Index>>& op,
               const std::vector<std::vector<bool>>& leq, Index unit, Index zero)
      : names_(std::move(elements)), unit_(unit), zero_(zero) {
    const std::size_t n = names_.size();
    if (n == 0) throw StructuralError("monoid must have at least one element");
    if (op.size() != n) throw StructuralError("op table has " + std::to_string(op.size()) + " rows, expected " + std::to_string(n));
    if (leq.size() != n) throw StructuralError("leq table has " + std::to_string(leq.size()) + " rows, expected " + std::to_string(n));
    if (unit >= n) throw StructuralError("unit index out of range");
    if (zero >= n) throw StructuralError("zero index out of range");
    std::set<std::string> seen;
    for (const auto& s : names_)
      if (!seen.insert(s).second) throw StructuralError("duplicate element name '" + s + "'");
    op_.resize(n * n);
    leq_.resize(n * n);
    for (Index a = 0; a < n; ++a) {
      if (op[a].size() != n) throw StructuralError("op row " + std::to_string(a) + " has wrong length");
      if (leq[a].size() != n) throw StructuralError("leq row " + std::to_string(a) + " has wrong length");
      for (Index b = 0; b < n; ++b) {
        if (op[a][b] >= n)
          throw StructuralError("op[" + std::to_string(a) + "][" + std::to_string(b) + "] out of range");
        op_[a * n + b] = op[a][b];
        leq_[a * n + b] = leq[a][b] ? 1 : 0;
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(Index i) const { return names_.at(i); }
  Index unit() const { return unit_; }
  Index zero() const { return zero_; }

  Index mul(Index a, Index b) const { return op_[a * size() + b]; }
  /// a <= b
  bool le(Index a, Index b) const { return leq_[a * size() + b] != 0; }
  /// a >= b
  bool ge(Index a, Index b) const { return le(b, a); }

  Index power(Index f, std::size_t k) const {
    Index r = unit_;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, f);
    return r;
  }

  std::vector<std::vector<Index>> op_table() const {
    std::vector<std::vector<Index>> t(size(), std::vector<Index>(size()));
    for (Index a = 0; a < size(); ++a)
      for (Index b = 0; b < size(); ++b) t[a][b] = mul(a, b);
    return t;
  }
  std::vector<std::vector<bool>> leq_table() const {
    std::vector<std::vector<bool>> t(size(), std::vector<bool>(size()));
    for (Index a = 0; a < size(); ++a)
      for (Index b = 0; b < size(); ++b) t[a][b] = le(a, b);
    return t;
  }

  std::optional<Index> find(const std::string& label) const {
    for (Index i = 0; i < size(); ++i)
      if (names_[i] == label) return i;
    return std::nullopt;
  }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Index> op_;
  std::vector<std::uint8_t> leq_;
  Index unit_;
  Index zero_;
};

/// Outcome of one law; `witness` is the first violating tuple in canonical order.
struct Law {
  bool holds = true;
  std::vector<Index> witness;

  void fail(std::vector<Index> w) {
    if (holds) {
      holds = false;
      witness = std::move(w);
    }
  }
};

struct AxiomReport {
  Law associative;
  Law commutative;
  Law unit_ok;
  Law order_ok;
  Law compat_ok;
  Law top_ok;
  Law least_ok;

  bool all() const {
    return associative.holds && commutative.holds && unit_ok.holds && order_ok.holds && compat_ok.holds &&
           top_ok.holds && least_ok.holds;
  }
  std::vector<std::pair<std::string, const Law*>> laws() const {
    return {{"associative", &associative}, {"commutative", &commutative}, {"unit_ok", &unit_ok},
            {"order_ok", &order_ok},       {"compat_ok", &compat_ok},     {"top_ok", &top_ok},
            {"least_ok", &least_ok}};
  }
};

inline AxiomReport verify_axioms(const FiniteMonoid& m) {
  AxiomReport r;
  const std::size_t n = m.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (m.mul(a, b) != m.mul(b, a)) r.commutative.fail({a, b});
      for (Index c = 0; c < n; ++c)
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) r.associative.fail({a, b, c});
    }
  for (Index a = 0; a < n; ++a)
    if (m.mul(m.unit(), a) != a || m.mul(a, m.unit()) != a) r.unit_ok.fail({a});

  // order_ok covers reflexivity, antisymmetry and transitivity.
  for (Index a = 0; a < n; ++a)
    if (!m.le(a, a)) r.order_ok.fail({a});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (a != b && m.le(a, b) && m.le(b, a)) r.order_ok.fail({a, b});
      if (!m.le(a, b)) continue;
      for (Index c = 0; c < n; ++c)
        if (m.le(b, c) && !m.le(a, c)) r.order_ok.fail({a, b, c});
    }
  // f >= g implies fh >= gh; witness (f, g, h)
  for (Index f = 0; f < n; ++f)
    for (Index g = 0; g < n; ++g) {
      if (!m.ge(f, g)) continue;
      for (Index h = 0; h < n; ++h)
        if (!m.ge(m.mul(f, h), m.mul(g, h))) r.compat_ok.fail({f, g, h});
    }
  for (Index f = 0; f < n; ++f) {
    if (!m.ge(m.unit(), f)) r.top_ok.fail({f});
    if (!m.le(m.zero(), f)) r.least_ok.fail({f});
  }
  return r;
}

struct StructuralPredicates {
  bool idempotent = true;
  bool not_nilpotent = true;
};

/// Powers f, f^2, ... of a single element until they cycle.
inline std::vector<Index> power_orbit(const FiniteMonoid& m, Index f) {
  std::vector<Index> orbit;
  std::vector<bool> seen(m.size(), false);
  Index p = f;
  while (!seen[p]) {
    seen[p] = true;
    orbit.push_back(p);
    p = m.mul(p, f);
  }
  return orbit;
}

inline StructuralPredicates structural_predicates(const FiniteMonoid& m) {
  StructuralPredicates s;
  for (Index f = 0; f < m.size(); ++f) {
    if (m.mul(f, f) != f) s.idempotent = false;
    if (f == m.zero()) continue;
    for (Index p : power_orbit(m, f))
      if (p == m.zero()) s.not_nilpotent = false;
  }
  return s;
}

/// The divisibility order f >= g iff fh = g for some h.
inline FiniteMonoid natural_order(std::vector<std::string> names, const std::vector<std::vector<Index>>& op) {
  const std::size_t n = names.size();
  if (op.size() != n) throw StructuralError("op table has wrong number of rows");
  for (const auto& row : op) {
    if (row.size() != n) throw StructuralError("op row has wrong length");
    for (Index v : row)
      if (v >= n) throw StructuralError("op entry out of range");
  }
  std::optional<Index> unit;
  for (Index u = 0; u < n && !unit; ++u) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = op[u][a] == a && op[a][u] == a;
    if (ok) unit = u;
  }
  if (!unit) throw DomainError("operation has no identity element");

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (Index f = 0; f < n; ++f)
    for (Index h = 0; h < n; ++h) leq[op[f][h]][f] = true;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a])
        throw DomainError("divisibility is not antisymmetric: " + names[a] + " and " + names[b] +
                          " divide each other");
  std::optional<Index> zero;
  for (Index z = 0; z < n && !zero; ++z) {
    bool least = true;
    for (Index f = 0; f < n && least; ++f) least = leq[z][f];
    if (least) zero = z;
  }
  if (!zero) throw DomainError("divisibility order has no least element");
  return FiniteMonoid(std::move(names), op, leq, *unit, *zero);
}

/// {f : hf = 0 for all h in T}
inline ElementSubset perp(const FiniteMonoid& m, const ElementSubset& t) {
  ElementSubset out(m.size());
  for (Index f = 0; f < m.size(); ++f) {
    bool ok = true;
    for (Index h : t.indices())
      if (m.mul(h, f) != m.zero()) {
        ok = false;
        break;
      }
    if (ok) out.insert(f);
  }
  return out;
}

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t k, std::size_t guard, const char* what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (base != 0 && r > guard / base) throw GuardExceeded(std::string(what) + " exceeds size guard " + std::to_string(guard));
    r *= base;
  }
  if (r > guard) throw GuardExceeded(std::string(what) + " exceeds size guard " + std::to_string(guard));
  return r;
}

// Mixed-radix digits, most significant first.
inline std::vector<Index> digits(std::size_t idx, std::size_t base, std::size_t k) {
  std::vector<Index> d(k);
  for (std::size_t i = k; i-- > 0;) {
    d[i] = idx % base;
    idx /= base;
  }
  return d;
}

inline std::size_t undigits(const std::vector<Index>& d, std::size_t base) {
  std::size_t idx = 0;
  for (Index x : d) idx = idx * base + x;
  return idx;
}

inline std::string tuple_label(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

}  // namespace detail

/// Fun({1..k}, M) with pointwise operation and order.
inline FiniteMonoid product_monoid(const FiniteMonoid& m, std::size_t k, std::size_t guard = kDefaultSizeGuard) {
  if (k == 0) throw DomainError("product exponent must be positive");
  const std::size_t n = m.size();
  const std::size_t total = detail::checked_power(n, k, guard, "product monoid");
  std::vector<std::string> names(total);
  std::vector<std::vector<Index>> digs(total);
  for (std::size_t i = 0; i < total; ++i) {
    digs[i] = detail::digits(i, n, k);
    std::vector<std::string> parts;
    for (Index x : digs[i]) parts.push_back(m.name(x));
    names[i] = detail::tuple_label(parts);
  }
  std::vector<std::vector<Index>> op(total, std::vector<Index>(total));
  std::vector<std::vector<bool>> leq(total, std::vector<bool>(total));
  std::vector<Index> buf(k);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < k; ++i) {
        buf[i] = m.mul(digs[a][i], digs[b][i]);
        le = le && m.le(digs[a][i], digs[b][i]);
      }
      op[a][b] = detail::undigits(buf, n);
      leq[a][b] = le;
    }
  std::vector<Index> ones(k, m.unit()), zeros(k, m.zero());
  return FiniteMonoid(std::move(names), op, leq, detail::undigits(ones, n), detail::undigits(zeros, n));
}

struct PointEmbedding {
  FiniteMonoid product;             ///< Fun({1..k}, M)
  FiniteMonoid monoid;              ///< W: closure of the evaluation maps under pointwise product
  std::vector<Index> point_map;     ///< coordinate i -> element of W (the evaluation map at i)
  std::vector<std::vector<Index>> values;  ///< element of W -> its value table over `product`
};

/// Embeds the points {1..k} into the monoid of functions on Fun({1..k}, M)
/// via evaluation maps, multiplied pointwise. W is the closure of the
/// evaluation maps and the constant unit under pointwise product; its zero is
/// its least element, a stable power of x1*...*xk.
inline PointEmbedding embed_points(const FiniteMonoid& m, std::size_t k, std::size_t guard = kDefaultSizeGuard) {
  if (k == 0) throw DomainError("number of points must be positive");
  if (k >= 63) throw GuardExceeded("too many points");
  FiniteMonoid prod = product_monoid(m, k, guard);
  const std::size_t n = m.size();
  const std::size_t p = prod.size();

  std::vector<std::vector<Index>> values;
  std::vector<std::vector<std::size_t>> exponents;  // a monomial reaching each element first
  std::map<std::vector<Index>, Index> index;
  auto add = [&](std::vector<Index> v, std::vector<std::size_t> e) -> Index {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (values.size() >= guard) throw GuardExceeded("point embedding closure exceeds size guard");
    const Index id = values.size();
    index.emplace(v, id);
    values.push_back(std::move(v));
    exponents.push_back(std::move(e));
    return id;
  };
  add(std::vector<Index>(p, m.unit()), std::vector<std::size_t>(k, 0));
  std::vector<Index> point_map(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Index> v(p);
    for (std::size_t f = 0; f < p; ++f) v[f] = detail::digits(f, n, k)[i];
    std::vector<std::size_t> e(k, 0);
    e[i] = 1;
    point_map[i] = add(std::move(v), std::move(e));
  }
  // Multiplying by the generators suffices: every element is a monomial.
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Index> v(p);
      for (std::size_t f = 0; f < p; ++f) v[f] = m.mul(values[a][f], values[point_map[i]][f]);
      std::vector<std::size_t> e = exponents[a];
      ++e[i];
      add(std::move(v), std::move(e));
    }

  const std::size_t w = values.size();
  std::vector<std::string> names;
  for (const auto& e : exponents) {
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] == 0) continue;
      label += (label.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
      if (e[i] > 1) label += "^" + std::to_string(e[i]);
    }
    names.push_back(label.empty() ? "1" : label);
  }
  std::vector<std::vector<Index>> op(w, std::vector<Index>(w));
  std::vector<std::vector<bool>> leq(w, std::vector<bool>(w));
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b) {
      std::vector<Index> prodv(p);
      bool le = true;
      for (std::size_t f = 0; f < p; ++f) {
        prodv[f] = m.mul(values[a][f], values[b][f]);
        le = le && m.le(values[a][f], values[b][f]);
      }
      auto it = index.find(prodv);
      if (it == index.end()) throw CertificateFailure("point embedding is not closed under products");
      op[a][b] = it->second;
      leq[a][b] = le;
    }
  Index zero = w;
  for (Index z = 0; z < w && zero == w; ++z) {
    bool least = true;
    for (Index x = 0; x < w && least; ++x) least = leq[z][x];
    if (least) zero = z;
  }
  if (zero == w) throw CertificateFailure("point embedding has no least element");
  FiniteMonoid wm(std::move(names), op, leq, 0, zero);
  return PointEmbedding{std::move(prod), std::move(wm), std::move(point_map), std::move(values)};
}

/// Adds a new top element "1" acting as identity to a p.o. semigroup
/// satisfying f >= fg and order compatibility.
inline FiniteMonoid adjoin_unit(std::vector<std::string> names, const std::vector<std::vector<Index>>& op,
                                const std::vector<std::vector<bool>>& leq, const std::string& unit_name = "1") {
  const std::size_t n = names.size();
  if (n == 0) throw StructuralError("semigroup must be nonempty");
  if (op.size() != n || leq.size() != n) throw StructuralError("semigroup tables have wrong dimensions");
  for (Index a = 0; a < n; ++a) {
    if (op[a].size() != n || leq[a].size() != n) throw StructuralError("semigroup table row has wrong length");
    for (Index v : op[a])
      if (v >= n) throw StructuralError("semigroup op entry out of range");
  }
  for (Index f = 0; f < n; ++f)
    for (Index g = 0; g < n; ++g) {
      if (!leq[op[f][g]][f])
        throw DomainError("semigroup violates f >= fg at (" + names[f] + ", " + names[g] + ")");
      if (!leq[g][f]) continue;
      for (Index h = 0; h < n; ++h)
        if (!leq[op[g][h]][op[f][h]])
          throw DomainError("semigroup order is not compatible at (" + names[f] + ", " + names[g] + ", " + names[h] + ")");
    }
  std::optional<Index> zero;
  for (Index z = 0; z < n && !zero; ++z) {
    bool least = true;
    for (Index f = 0; f < n && least; ++f) least = leq[z][f];
    if (least) zero = z;
  }
  if (!zero) throw DomainError("semigroup has no least element");

  std::vector<std::vector<Index>> op2(n + 1, std::vector<Index>(n + 1));
  std::vector<std::vector<bool>> leq2(n + 1, std::vector<bool>(n + 1, false));
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; b <= n; ++b) {
      if (a == n) op2[a][b] = b;
      else if (b == n) op2[a][b] = a;
      else op2[a][b] = op[a][b];
      if (b == n) leq2[a][b] = true;
      else if (a < n) leq2[a][b] = leq[a][b];
    }
  names.push_back(unit_name);
  return FiniteMonoid(std::move(names), op2, leq2, n, *zero);
}

/// An isomorphism of p.o. monoids (bijection preserving op, order, unit, zero),
/// as the image of each element of `a` in `b`.
inline std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<Index> map(n, n);
  std::vector<bool> used(n, false);
  auto consistent = [&](Index upto) {
    for (Index x = 0; x <= upto; ++x)
      for (Index y = 0; y <= upto; ++y) {
        if (a.le(x, y) != b.le(map[x], map[y])) return false;
        Index xy = a.mul(x, y);
        if (map[xy] != n && map[xy] != b.mul(map[x], map[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Index x) -> bool {
    if (x == n) {
      for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q)
          if (map[a.mul(p, q)] != b.mul(map[p], map[q])) return false;
      return map[a.unit()] == b.unit() && map[a.zero()] == b.zero();
    }
    for (Index y = 0; y < n; ++y) {
      if (used[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) return true;
      used[y] = false;
      map[x] = n;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace pom

#endif  // POM_MONOID_HPP
