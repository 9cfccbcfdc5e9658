#ifndef POM_ENDOMAP_HPP
#define POM_ENDOMAP_HPP

#include <compare>
#include <string>
#include <vector>

#include "pom/monoid.hpp"

namespace pom {

/// A self-map of a finite monoid, stored as its image table.
class EndoMap {
 public:
  EndoMap() = default;
  explicit EndoMap(std::vector<Index> image) : image_(std::move(image)) {}

  static EndoMap identity(std::size_t n) {
    std::vector<Index> img(n);
    for (Index i = 0; i < n; ++i) img[i] = i;
    return EndoMap(std::move(img));
  }
  static EndoMap constant(std::size_t n, Index value) { return EndoMap(std::vector<Index>(n, value)); }

  std::size_t size() const { return image_.size(); }
  Index operator()(Index f) const { return image_[f]; }
  const std::vector<Index>& image() const { return image_; }

  /// (this ∘ inner)(f) = this(inner(f))
  EndoMap after(const EndoMap& inner) const {
    std::vector<Index> img(inner.size());
    for (Index f = 0; f < inner.size(); ++f) img[f] = image_[inner(f)];
    return EndoMap(std::move(img));
  }

  /// Throws StructuralError unless the map is a self-map of `m`.
  void check(const FiniteMonoid& m) const {
    if (image_.size() != m.size())
      throw StructuralError("map has " + std::to_string(image_.size()) + " entries, monoid has " + std::to_string(m.size()));
    for (Index v : image_)
      if (v >= m.size()) throw StructuralError("map value out of range");
  }

  ElementSubset range(std::size_t n) const {
    ElementSubset r(n);
    for (Index v : image_) r.insert(v);
    return r;
  }

  /// Image of a subset: Q[T].
  ElementSubset apply(const ElementSubset& t) const {
    ElementSubset r(t.universe());
    for (Index f : t.indices()) r.insert(image_[f]);
    return r;
  }

  bool operator==(const EndoMap&) const = default;
  auto operator<=>(const EndoMap&) const = default;

 private:
  std::vector<Index> image_;
};

}  // namespace pom

#endif  // POM_ENDOMAP_HPP
