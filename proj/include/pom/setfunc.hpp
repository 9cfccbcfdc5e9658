#ifndef POM_SETFUNC_HPP
#define POM_SETFUNC_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pom/kappa.hpp"
#include "pom/projection_problem.hpp"
#include "pom/rational.hpp"

namespace pom {

/// A point of the d-dimensional rational lattice with coordinatewise order.
using VectorValue = std::vector<Rational>;

enum class Norm { l1, linf };

inline bool is_zero(const VectorValue& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// a <= b coordinatewise
inline bool vec_le(const VectorValue& a, const VectorValue& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline VectorValue vec_min(const VectorValue& a, const VectorValue& b) {
  VectorValue out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

inline Rational norm(const VectorValue& v, Norm kind = Norm::l1) {
  Rational out(0);
  for (const auto& x : v) {
    Rational a = abs(x);
    if (kind == Norm::l1) out += a;
    else if (a > out) out = a;
  }
  return out;
}

/// Monotone F : M → ℚᵈ with F(0) = 0.
class SetFunction {
 public:
  SetFunction(std::shared_ptr<const FiniteMonoid> m, std::size_t dim, std::vector<VectorValue> values)
      : m_(std::move(m)), dim_(dim), values_(std::move(values)) {
    if (!m_) throw StructuralError("set function needs a monoid");
    if (dim_ == 0) throw StructuralError("set function dimension must be positive");
    if (values_.size() != m_->size())
      throw StructuralError("set function has " + std::to_string(values_.size()) + " values, expected " +
                            std::to_string(m_->size()));
    for (std::size_t f = 0; f < values_.size(); ++f)
      if (values_[f].size() != dim_) throw StructuralError("value " + std::to_string(f) + " has wrong dimension");
    if (!is_zero(values_[m_->zero()])) throw DomainError("set function does not vanish at 0");
    for (Index f = 0; f < m_->size(); ++f)
      for (Index g = 0; g < m_->size(); ++g)
        if (m_->le(g, f) && !vec_le(values_[g], values_[f]))
          throw DomainError("set function is not monotone at (" + m_->name(f) + ", " + m_->name(g) + ")");
  }

  SetFunction(const FiniteMonoid& m, std::size_t dim, std::vector<VectorValue> values)
      : SetFunction(std::make_shared<const FiniteMonoid>(m), dim, std::move(values)) {}

  static SetFunction zero(std::shared_ptr<const FiniteMonoid> m, std::size_t dim) {
    const std::size_t n = m->size();
    return SetFunction(std::move(m), dim, std::vector<VectorValue>(n, VectorValue(dim, Rational(0))));
  }

  /// d = 1 from a list of scalars.
  static SetFunction scalar(std::shared_ptr<const FiniteMonoid> m, const std::vector<Rational>& v) {
    std::vector<VectorValue> vals;
    for (const auto& x : v) vals.push_back({x});
    return SetFunction(std::move(m), 1, std::move(vals));
  }

  const FiniteMonoid& monoid() const { return *m_; }
  const std::shared_ptr<const FiniteMonoid>& monoid_ptr() const { return m_; }
  std::size_t dim() const { return dim_; }
  const VectorValue& operator()(Index f) const { return values_.at(f); }
  const std::vector<VectorValue>& values() const { return values_; }
  bool vanishes_at(Index f) const { return is_zero(values_.at(f)); }

  /// F∘T_h : f ↦ F(hf)
  SetFunction translated(Index h) const {
    std::vector<VectorValue> v(values_.size());
    for (Index f = 0; f < values_.size(); ++f) v[f] = values_[m_->mul(h, f)];
    return SetFunction(m_, dim_, std::move(v));
  }

  /// F∘P
  SetFunction composed(const EndoMap& p) const {
    p.check(*m_);
    std::vector<VectorValue> v(values_.size());
    for (Index f = 0; f < values_.size(); ++f) v[f] = values_[p(f)];
    return SetFunction(m_, dim_, std::move(v));
  }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_ && (a.m_ == b.m_ || *a.m_ == *b.m_);
  }

 private:
  std::shared_ptr<const FiniteMonoid> m_;
  std::size_t dim_;
  std::vector<VectorValue> values_;
};

/// F⁻¹(0), an order ideal for every valid F.
inline IdealSubset zero_set(const SetFunction& f) {
  ElementSubset z(f.monoid().size());
  for (Index x = 0; x < f.monoid().size(); ++x)
    if (f.vanishes_at(x)) z.insert(x);
  return classify(f.monoid(), z);
}

/// F⁻¹(0) is a radical monoid ideal. The countability clause of the infinite
/// setting holds trivially for finite M.
inline bool in_MON_sigma(const SetFunction& f) {
  IdealSubset z = zero_set(f);
  return z.flags.monoid_ideal && z.flags.radical;
}

/// Pointwise composition rule of the function semigroup.
using ValueComposition = std::function<VectorValue(const VectorValue&, const VectorValue&)>;

inline VectorValue pointwise_min(const VectorValue& a, const VectorValue& b) { return vec_min(a, b); }

/// Outcome of the construction checks of a function family: compositions stay
/// monotone and vanish at 0, respect the product order, and satisfy
/// (F∘T_f)G ≤ (FG)∘T_f.
struct FamilyLaws {
  Law closed;        ///< witness {F, G, f} of a composite that leaves the semigroup
  Law compatible;    ///< witness {F, F', G, f}: F ≤ F' but FG ≰ F'G at f
  Law translation;   ///< witness {F, G, f, g}: the translation inequality fails at g
  bool all() const { return closed.holds && compatible.holds && translation.holds; }
};

/// A finite family of set functions over one monoid and dimension.
class FunctionFamily {
 public:
  explicit FunctionFamily(std::vector<SetFunction> members, ValueComposition comp = pointwise_min)
      : members_(std::move(members)), comp_(std::move(comp)) {
    if (members_.empty()) throw DomainError("function family must be nonempty");
    for (const auto& f : members_) {
      if (f.dim() != members_.front().dim()) throw StructuralError("family members differ in dimension");
      if (!(f.monoid() == members_.front().monoid())) throw StructuralError("family members live on different monoids");
    }
    laws_ = check_laws();
  }

  std::size_t size() const { return members_.size(); }
  const SetFunction& operator[](std::size_t i) const { return members_.at(i); }
  const std::vector<SetFunction>& members() const { return members_; }
  const FiniteMonoid& monoid() const { return members_.front().monoid(); }
  std::size_t dim() const { return members_.front().dim(); }
  const FamilyLaws& laws() const { return laws_; }

  VectorValue compose_value(const VectorValue& a, const VectorValue& b) const { return comp_(a, b); }

  std::vector<VectorValue> compose_values(const SetFunction& a, const SetFunction& b) const {
    std::vector<VectorValue> v(a.values().size());
    for (Index f = 0; f < v.size(); ++f) v[f] = comp_(a(f), b(f));
    return v;
  }

  /// FG; throws DomainError if the composite is not monotone or not zero at 0.
  SetFunction compose(const SetFunction& a, const SetFunction& b) const {
    return SetFunction(a.monoid_ptr(), a.dim(), compose_values(a, b));
  }

  /// Ψ⁻¹(0) = ⋂ F⁻¹(0)
  ElementSubset common_zero_set() const {
    ElementSubset z = ElementSubset::full(monoid().size());
    for (const auto& f : members_) z = z & zero_set(f).members;
    return z;
  }

 private:
  FamilyLaws check_laws() const {
    FamilyLaws out;
    const FiniteMonoid& m = monoid();
    const std::size_t n = m.size(), k = members_.size();
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) {
        auto ab = compose_values(members_[a], members_[b]);
        if (!is_zero(ab[m.zero()])) out.closed.fail({a, b, m.zero()});
        for (Index f = 0; f < n; ++f)
          for (Index g = 0; g < n; ++g)
            if (m.le(g, f) && !vec_le(ab[g], ab[f])) out.closed.fail({a, b, f});
        for (Index a2 = 0; a2 < k; ++a2) {
          bool below = true;
          for (Index f = 0; f < n && below; ++f) below = vec_le(members_[a](f), members_[a2](f));
          if (!below) continue;
          auto a2b = compose_values(members_[a2], members_[b]);
          for (Index f = 0; f < n; ++f)
            if (!vec_le(ab[f], a2b[f])) out.compatible.fail({a, a2, b, f});
        }
        for (Index f = 0; f < n; ++f)
          for (Index g = 0; g < n; ++g) {
            // ((F∘T_f)G)(g) = comp(F(fg), G(g));  ((FG)∘T_f)(g) = comp(F(fg), G(fg))
            const Index fg = m.mul(f, g);
            if (!vec_le(comp_(members_[a](fg), members_[b](g)), ab[fg])) out.translation.fail({a, b, f, g});
          }
      }
    return out;
  }

  std::vector<SetFunction> members_;
  ValueComposition comp_;
  FamilyLaws laws_;
};

// ---------------------------------------------------------------------------
// Boolean algebras

/// Identifies a monoid with the subsets of its atoms: op is intersection
/// and the order is inclusion.
struct BooleanView {
  std::vector<Index> atoms;           ///< minimal nonzero elements, ascending
  std::vector<std::uint64_t> mask;    ///< element → atom bitmask
  std::vector<Index> element;         ///< atom bitmask → element

  Index join(Index a, Index b) const { return element[mask[a] | mask[b]]; }
  Index difference(Index a, Index b) const { return element[mask[a] & ~mask[b]]; }
};

inline BooleanView boolean_view(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  BooleanView v;
  for (Index x = 0; x < n; ++x) {
    if (x == m.zero()) continue;
    bool minimal = true;
    for (Index y = 0; y < n && minimal; ++y)
      if (y != x && y != m.zero() && m.le(y, x)) minimal = false;
    if (minimal) v.atoms.push_back(x);
  }
  const std::size_t k = v.atoms.size();
  if (k >= 63 || (std::size_t{1} << k) != n) throw DomainError("monoid is not a Boolean algebra");
  v.mask.assign(n, 0);
  v.element.assign(n, n);
  for (Index x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i)
      if (m.le(v.atoms[i], x)) v.mask[x] |= std::uint64_t{1} << i;
    if (v.element[v.mask[x]] != n) throw DomainError("monoid is not a Boolean algebra");
    v.element[v.mask[x]] = x;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (m.mul(a, b) != v.element[v.mask[a] & v.mask[b]]) throw DomainError("monoid is not a Boolean algebra");
      if (m.le(a, b) != ((v.mask[a] & ~v.mask[b]) == 0)) throw DomainError("monoid is not a Boolean algebra");
    }
  return v;
}

/// μ(A) = Σ_{atoms i ⊆ A} w_i
inline SetFunction measure_from_atoms(std::shared_ptr<const FiniteMonoid> m, const std::vector<Rational>& weights) {
  BooleanView v = boolean_view(*m);
  if (weights.size() != v.atoms.size()) throw StructuralError("one weight per atom expected");
  std::vector<Rational> vals(m->size());
  for (Index x = 0; x < m->size(); ++x)
    for (std::size_t i = 0; i < weights.size(); ++i)
      if ((v.mask[x] >> i) & 1U) vals[x] += weights[i];
  return SetFunction::scalar(std::move(m), vals);
}

inline SetFunction uniform_measure(std::shared_ptr<const FiniteMonoid> m) {
  const std::size_t k = boolean_view(*m).atoms.size();
  return measure_from_atoms(std::move(m), std::vector<Rational>(k, Rational(1, static_cast<long>(k))));
}

inline SetFunction dirac_measure(std::shared_ptr<const FiniteMonoid> m, std::size_t atom) {
  const std::size_t k = boolean_view(*m).atoms.size();
  if (atom >= k) throw StructuralError("atom index out of range");
  std::vector<Rational> w(k, Rational(0));
  w[atom] = 1;
  return measure_from_atoms(std::move(m), w);
}

struct SubmeasureCheck {
  bool ok = true;
  std::string law;             ///< "normalized" or "subadditive" on failure
  std::vector<Index> witness;  ///< {A, B} for subadditivity
  explicit operator bool() const { return ok; }
};

/// μ(∅) = 0, μ(1) = 1, monotone (by construction) and μ(A∪B) ≤ μ(A) + μ(B).
inline SubmeasureCheck is_submeasure(const SetFunction& mu) {
  if (mu.dim() != 1) throw DomainError("a submeasure is scalar");
  const FiniteMonoid& m = mu.monoid();
  BooleanView v = boolean_view(m);
  SubmeasureCheck out;
  if (mu(m.unit())[0] != 1) return {false, "normalized", {m.unit()}};
  for (Index a = 0; a < m.size(); ++a)
    for (Index b = a + 1; b < m.size(); ++b)
      if (mu(v.join(a, b))[0] > mu(a)[0] + mu(b)[0]) return {false, "subadditive", {a, b}};
  return out;
}

struct Disjointification {
  std::vector<Index> sets;         ///< Ā_n = A_n \ ⋃_{j<n} A_j
  bool null_overlaps = false;      ///< μ(A_n ∩ A_k) = 0 for all n ≠ k
  bool measures_preserved = false; ///< μ(Ā_n) = μ(A_n) for all n
};

/// When the overlaps are null the disjointified sets keep their measure; a
/// violation raises CertificateFailure.
inline Disjointification disjointify(const SetFunction& mu, const std::vector<Index>& seq) {
  if (!is_submeasure(mu)) throw DomainError("disjointify requires a submeasure");
  const FiniteMonoid& m = mu.monoid();
  BooleanView v = boolean_view(m);
  Disjointification out;
  Index seen = m.zero();
  for (Index a : seq) {
    if (a >= m.size()) throw StructuralError("sequence element out of range");
    out.sets.push_back(v.difference(a, seen));
    seen = v.join(seen, a);
  }
  out.null_overlaps = true;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!mu.vanishes_at(m.mul(seq[i], seq[j]))) out.null_overlaps = false;
  out.measures_preserved = true;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (mu(out.sets[i]) != mu(seq[i])) out.measures_preserved = false;
  if (out.null_overlaps && !out.measures_preserved)
    throw CertificateFailure("disjointification changed a measure despite null overlaps");
  return out;
}

// ---------------------------------------------------------------------------
// Capacities

inline constexpr std::size_t kDefaultCapacityBound = 3;

struct CapacityCheck {
  bool ok = true;
  std::optional<Index> at;     ///< f where inclusion–exclusion fails
  std::vector<Index> family;   ///< b
  std::size_t coordinate = 0;
  bool antichain_ok = true;    ///< Γ(1) ≥ Σ Γ(f_n) over a largest Γ⁻¹(0)-disjoint family
  std::vector<Index> antichain;
  explicit operator bool() const { return ok && antichain_ok; }
};

/// Γ(f) ≥ Σ_{∅≠b₀⊆b} (−1)^{1+|b₀|} Γ(∏ b₀) for every f and every b of at
/// most `b_max` elements below f, coordinatewise.
inline CapacityCheck is_supermodular_capacity(const SetFunction& gamma, std::size_t b_max = kDefaultCapacityBound) {
  const FiniteMonoid& m = gamma.monoid();
  if (!structural_predicates(m).idempotent) throw DomainError("supermodular capacities need an idempotent monoid");
  if (b_max == 0 || b_max > 16) throw DomainError("b_max must lie in 1..16");
  CapacityCheck out;
  const std::size_t d = gamma.dim();
  for (Index f = 0; f < m.size() && out.ok; ++f) {
    std::vector<Index> below;
    for (Index h = 0; h < m.size(); ++h)
      if (m.le(h, f)) below.push_back(h);
    std::vector<Index> b;
    auto visit = [&](auto&& self, std::size_t from) -> void {
      if (!out.ok) return;
      if (!b.empty()) {
        const std::size_t s = b.size();
        for (std::size_t c = 0; c < d && out.ok; ++c) {
          Rational rhs(0);
          for (std::uint32_t sub = 1; sub < (1U << s); ++sub) {
            Index prod = m.unit();
            for (std::size_t i = 0; i < s; ++i)
              if ((sub >> i) & 1U) prod = m.mul(prod, b[i]);
            if (std::popcount(sub) % 2 == 1) rhs += gamma(prod)[c];
            else rhs -= gamma(prod)[c];
          }
          if (gamma(f)[c] < rhs) {
            out.ok = false;
            out.at = f;
            out.family = b;
            out.coordinate = c;
          }
        }
      }
      if (b.size() == b_max) return;
      for (std::size_t i = from; i < below.size(); ++i) {
        b.push_back(below[i]);
        self(self, i + 1);
        b.pop_back();
      }
    };
    visit(visit, 0);
  }
  // Mutually Γ⁻¹(0)-disjoint families can only be finite sums below Γ(1).
  const ElementSubset z = zero_set(gamma).members;
  out.antichain = kappa(m, ElementSubset::full(m.size()), z).witness;
  VectorValue total(d, Rational(0));
  for (Index f : out.antichain)
    for (std::size_t c = 0; c < d; ++c) total[c] += gamma(f)[c];
  out.antichain_ok = vec_le(total, gamma(m.unit()));
  return out;
}

// ---------------------------------------------------------------------------
// Halmos–Savage extraction

struct HalmosSavage {
  std::vector<Index> h;         ///< h₁ < h₂ < … in T
  std::size_t kappa_bound = 1;  ///< κ(M, Γ⁻¹(0)); h.size() < kappa_bound
};

/// Finite h₁..h_k ∈ T with (∃h∈T) Γ(fh)≠0 ⇔ (∃n) Γ(fh_n)≠0 for every f,
/// obtained by reducing T against the translates and the ideal Γ⁻¹(0).
inline HalmosSavage halmos_savage_extract(const SetFunction& gamma, const ElementSubset& t) {
  const FiniteMonoid& m = gamma.monoid();
  if (!in_MON_sigma(gamma)) throw DomainError("Halmos-Savage extraction needs a radical zero set");
  const ElementSubset z = zero_set(gamma).members;
  Reduction r = reduce_set(m, t, translates(m), z);
  HalmosSavage out;
  out.h = r.t0.indices();
  out.kappa_bound = kappa(m, ElementSubset::full(m.size()), z).k;
  for (Index f = 0; f < m.size(); ++f) {
    bool some_t = false, some_h = false;
    for (Index x : t.indices()) some_t = some_t || !gamma.vanishes_at(m.mul(f, x));
    for (Index x : out.h) some_h = some_h || !gamma.vanishes_at(m.mul(f, x));
    if (some_t != some_h) throw CertificateFailure("extracted elements do not detect " + m.name(f));
  }
  if (out.h.size() >= out.kappa_bound) throw CertificateFailure("extraction exceeds the kappa bound");
  return out;
}

struct EquivalentCapacity {
  SetFunction psi;
  bool degenerate = false;  ///< empty h-list: ψ₀ = 0
};

/// ψ₀(f) = Σ_n 2⁻ⁿ Γ(f h_n), n = 1, 2, …
inline EquivalentCapacity equivalent_capacity(const SetFunction& gamma, const std::vector<Index>& hs) {
  const FiniteMonoid& m = gamma.monoid();
  std::vector<VectorValue> vals(m.size(), VectorValue(gamma.dim(), Rational(0)));
  for (std::size_t n = 0; n < hs.size(); ++n) {
    if (hs[n] >= m.size()) throw StructuralError("h index out of range");
    const Rational w = dyadic(static_cast<unsigned>(n + 1));
    for (Index f = 0; f < m.size(); ++f)
      for (std::size_t c = 0; c < gamma.dim(); ++c) vals[f][c] += w * gamma(m.mul(f, hs[n]))[c];
  }
  return {SetFunction(gamma.monoid_ptr(), gamma.dim(), std::move(vals)), hs.empty()};
}

/// Same, verifying ψ₀(f) = 0 ⇔ Γ(fh) = 0 for all h ∈ T. An empty h-list is
/// accepted only when T ⊆ Γ⁻¹(0).
inline EquivalentCapacity equivalent_capacity(const SetFunction& gamma, const std::vector<Index>& hs,
                                              const ElementSubset& t) {
  const FiniteMonoid& m = gamma.monoid();
  if (hs.empty())
    for (Index x : t.indices())
      if (!gamma.vanishes_at(x)) throw DomainError("empty h-list but T is not contained in the zero set");
  EquivalentCapacity out = equivalent_capacity(gamma, hs);
  for (Index f = 0; f < m.size(); ++f) {
    bool all_zero = true;
    for (Index x : t.indices()) all_zero = all_zero && gamma.vanishes_at(m.mul(f, x));
    if (out.psi.vanishes_at(f) != all_zero)
      throw CertificateFailure("equivalent capacity disagrees with the family at " + m.name(f));
  }
  return out;
}

}  // namespace pom

#endif  // POM_SETFUNC_HPP
