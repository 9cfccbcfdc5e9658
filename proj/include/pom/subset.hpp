#ifndef POM_SUBSET_HPP
#define POM_SUBSET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pom/error.hpp"

namespace pom {

using Index = std::size_t;

/// A subset of the elements {0, ..., n-1} of a finite monoid.
///
/// Indices are always reported in ascending order. Subsets of the same
/// universe are totally ordered canonically: first by cardinality, then
/// lexicographically by their ascending index lists.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(std::size_t universe) : member_(universe, false) {}

  static ElementSubset of(std::size_t universe, std::span<const Index> indices) {
    ElementSubset s(universe);
    for (Index i : indices) s.insert(i);
    return s;
  }
  static ElementSubset of(std::size_t universe, std::initializer_list<Index> indices) {
    return of(universe, std::span<const Index>(indices.begin(), indices.size()));
  }
  static ElementSubset full(std::size_t universe) {
    ElementSubset s(universe);
    std::fill(s.member_.begin(), s.member_.end(), true);
    return s;
  }
  /// Bit i of `mask` selects element i. Only for universes of at most 64 elements.
  static ElementSubset from_mask(std::size_t universe, unsigned long long mask) {
    ElementSubset s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
      if ((mask >> i) & 1ULL) s.member_[i] = true;
    return s;
  }

  std::size_t universe() const { return member_.size(); }

  bool contains(Index i) const { return i < member_.size() && member_[i]; }

  void insert(Index i) {
    check(i);
    member_[i] = true;
  }
  void erase(Index i) {
    check(i);
    member_[i] = false;
  }

  std::size_t count() const {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
  }
  bool empty() const { return count() == 0; }

  std::vector<Index> indices() const {
    std::vector<Index> out;
    for (Index i = 0; i < member_.size(); ++i)
      if (member_[i]) out.push_back(i);
    return out;
  }

  bool is_subset_of(const ElementSubset& other) const {
    same_universe(other);
    for (Index i = 0; i < member_.size(); ++i)
      if (member_[i] && !other.member_[i]) return false;
    return true;
  }

  ElementSubset complement() const {
    ElementSubset s(universe());
    for (Index i = 0; i < member_.size(); ++i) s.member_[i] = !member_[i];
    return s;
  }

  ElementSubset operator&(const ElementSubset& other) const {
    same_universe(other);
    ElementSubset s(universe());
    for (Index i = 0; i < member_.size(); ++i) s.member_[i] = member_[i] && other.member_[i];
    return s;
  }
  ElementSubset operator|(const ElementSubset& other) const {
    same_universe(other);
    ElementSubset s(universe());
    for (Index i = 0; i < member_.size(); ++i) s.member_[i] = member_[i] || other.member_[i];
    return s;
  }
  ElementSubset operator-(const ElementSubset& other) const {
    same_universe(other);
    ElementSubset s(universe());
    for (Index i = 0; i < member_.size(); ++i) s.member_[i] = member_[i] && !other.member_[i];
    return s;
  }

  bool operator==(const ElementSubset&) const = default;

  std::strong_ordering operator<=>(const ElementSubset& other) const {
    if (auto c = universe() <=> other.universe(); c != 0) return c;
    if (auto c = count() <=> other.count(); c != 0) return c;
    auto a = indices();
    auto b = other.indices();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  void check(Index i) const {
    if (i >= member_.size())
      throw StructuralError("element index " + std::to_string(i) + " out of range (universe " +
                            std::to_string(member_.size()) + ")");
  }
  void same_universe(const ElementSubset& other) const {
    if (other.universe() != universe()) throw StructuralError("subsets over different universes");
  }

  std::vector<bool> member_;
};

}  // namespace pom

#endif  // POM_SUBSET_HPP
