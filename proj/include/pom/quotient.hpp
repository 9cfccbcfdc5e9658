#ifndef POM_QUOTIENT_HPP
#define POM_QUOTIENT_HPP

#include <string>
#include <vector>

#include "pom/ideals.hpp"

namespace pom {

/// f ≥_I g iff fh ∈ I implies gh ∈ I for every h; computed literally.
class RelativeOrder {
 public:
  RelativeOrder(const FiniteMonoid& m, const ElementSubset& ideal) : n_(m.size()), ge_(n_ * n_, 0) {
    for (Index f = 0; f < n_; ++f)
      for (Index g = 0; g < n_; ++g) {
        bool ok = true;
        for (Index h = 0; h < n_ && ok; ++h)
          if (ideal.contains(m.mul(f, h)) && !ideal.contains(m.mul(g, h))) ok = false;
        ge_[f * n_ + g] = ok ? 1 : 0;
      }
  }
  bool ge(Index f, Index g) const { return ge_[f * n_ + g] != 0; }
  bool equivalent(Index f, Index g) const { return ge(f, g) && ge(g, f); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> ge_;
};

struct QuotientReport {
  bool well_defined = true;       ///< op and order independent of representatives
  bool top_ok = true;             ///< quotient satisfies 1 ≥ f
  bool homomorphism = true;       ///< canonical map preserves composition and unit
  bool preserves_order = true;    ///< f ≥ g implies f/I ≥ g/I
  bool preserves_natural_order = true;
  bool not_nilpotent = true;      ///< the quotient has no nonzero nilpotent
};

/// M/I for a monoid ideal I: classes of mutual ≥_I.
struct QuotientMonoid {
  std::vector<std::vector<Index>> classes;  ///< ordered by least representative
  std::vector<Index> class_of;              ///< element -> class
  FiniteMonoid monoid;                      ///< class-level op and order
  QuotientReport report;

  std::size_t size() const { return classes.size(); }
  Index representative(Index c) const { return classes[c].front(); }
};

inline QuotientMonoid quotient(const FiniteMonoid& m, const ElementSubset& ideal) {
  if (ideal.universe() != m.size()) throw StructuralError("subset universe does not match monoid size");
  if (!is_monoid_ideal(m, ideal)) throw DomainError("quotient requires a monoid ideal");
  const std::size_t n = m.size();
  RelativeOrder rel(m, ideal);

  std::vector<Index> class_of(n, n);
  std::vector<std::vector<Index>> classes;
  for (Index f = 0; f < n; ++f) {
    if (class_of[f] != n) continue;
    Index c = classes.size();
    classes.emplace_back();
    for (Index g = f; g < n; ++g)
      if (class_of[g] == n && rel.equivalent(f, g)) {
        class_of[g] = c;
        classes.back().push_back(g);
      }
  }
  const std::size_t k = classes.size();

  QuotientReport rep;
  for (Index f = 0; f < n; ++f)
    for (Index g = 0; g < n; ++g) {
      Index cf = class_of[f], cg = class_of[g];
      Index r1 = classes[cf].front(), r2 = classes[cg].front();
      if (class_of[m.mul(f, g)] != class_of[m.mul(r1, r2)]) rep.well_defined = false;
      if (rel.ge(f, g) != rel.ge(r1, r2)) rep.well_defined = false;
    }

  std::vector<std::string> names;
  std::vector<std::vector<Index>> op(k, std::vector<Index>(k));
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (Index a = 0; a < k; ++a) {
    names.push_back("[" + m.name(classes[a].front()) + "]");
    for (Index b = 0; b < k; ++b) {
      op[a][b] = class_of[m.mul(classes[a].front(), classes[b].front())];
      leq[a][b] = rel.ge(classes[b].front(), classes[a].front());
    }
  }
  // Least class: every representative f satisfies f ≥_I z.
  Index zero = class_of[m.zero()];
  for (Index c = 0; c < k; ++c) {
    bool least = true;
    for (Index d = 0; d < k && least; ++d) least = leq[c][d];
    if (least) {
      zero = c;
      break;
    }
  }
  FiniteMonoid qm(std::move(names), op, leq, class_of[m.unit()], zero);

  for (Index c = 0; c < k; ++c)
    if (!qm.ge(qm.unit(), c)) rep.top_ok = false;
  for (Index f = 0; f < n; ++f)
    for (Index g = 0; g < n; ++g) {
      if (class_of[m.mul(f, g)] != qm.mul(class_of[f], class_of[g])) rep.homomorphism = false;
      if (m.ge(f, g) && !qm.ge(class_of[f], class_of[g])) rep.preserves_order = false;
    }
  for (Index f = 0; f < n; ++f)
    for (Index h = 0; h < n; ++h)
      if (!qm.ge(class_of[f], class_of[m.mul(f, h)])) rep.preserves_natural_order = false;
  rep.not_nilpotent = structural_predicates(qm).not_nilpotent;
  return QuotientMonoid{std::move(classes), std::move(class_of), std::move(qm), rep};
}

}  // namespace pom

#endif  // POM_QUOTIENT_HPP
