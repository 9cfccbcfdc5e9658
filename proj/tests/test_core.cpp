#include <gtest/gtest.h>

#include <random>

#include "pom/error.hpp"
#include "pom/generators.hpp"
#include "pom/monoid.hpp"
#include "support.hpp"

using namespace pom;
using pomtest::catalog;

namespace {

ElementSubset idx(const FiniteMonoid& m, std::initializer_list<Index> i) { return ElementSubset::of(m.size(), i); }

}  // namespace

TEST(Axioms, HoldOnEveryCatalogMonoid) {
  for (const auto& c : catalog()) {
    AxiomReport r = verify_axioms(c.m);
    EXPECT_TRUE(r.all()) << c.name;
  }
}

TEST(Axioms, CappedExponentThreeTwoIsLawful) {
  FiniteMonoid m = capped_exponent(3, 2);
  EXPECT_EQ(m.size(), 27U);
  EXPECT_TRUE(verify_axioms(m).all());
  EXPECT_FALSE(structural_predicates(m).idempotent);
}

TEST(Axioms, BrokenAssociativityHasTripleWitness) {
  auto op = chain(3).op_table();
  auto leq = chain(3).leq_table();
  op[1][2] = 0;
  FiniteMonoid bad({"0", "m", "1"}, op, leq, 2, 0);
  AxiomReport r = verify_axioms(bad);
  EXPECT_FALSE(r.associative.holds);
  ASSERT_EQ(r.associative.witness.size(), 3U);
  const auto& w = r.associative.witness;
  EXPECT_NE(bad.mul(bad.mul(w[0], w[1]), w[2]), bad.mul(w[0], bad.mul(w[1], w[2])));
  EXPECT_FALSE(r.all());
}

TEST(Axioms, AgreeWithDirectChecksOnRandomTables) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Index> pick(0, 3);
  FiniteMonoid base = pomtest::null_chain();
  for (int trial = 0; trial < 300; ++trial) {
    auto op = base.op_table();
    op[pick(rng) % 3][pick(rng) % 3] = pick(rng);
    FiniteMonoid m(base.elements(), op, base.leq_table(), 3, 0);
    bool assoc = true, comm = true, compat = true;
    for (Index a = 0; a < 4; ++a)
      for (Index b = 0; b < 4; ++b) {
        comm = comm && m.mul(a, b) == m.mul(b, a);
        for (Index c = 0; c < 4; ++c) {
          assoc = assoc && m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c));
          compat = compat && (!m.le(b, a) || m.le(m.mul(b, c), m.mul(a, c)));
        }
      }
    AxiomReport r = verify_axioms(m);
    EXPECT_EQ(r.associative.holds, assoc);
    EXPECT_EQ(r.commutative.holds, comm);
    EXPECT_EQ(r.compat_ok.holds, compat);
    EXPECT_TRUE(r.order_ok.holds);
  }
}

TEST(Structure, IdempotenceAndNilpotence) {
  auto b3 = structural_predicates(boolean_algebra(3));
  EXPECT_TRUE(b3.idempotent);
  EXPECT_TRUE(b3.not_nilpotent);
  auto e22 = structural_predicates(capped_exponent(2, 2));
  EXPECT_FALSE(e22.idempotent);
  EXPECT_FALSE(e22.not_nilpotent);
  auto c4 = structural_predicates(chain(4));
  EXPECT_TRUE(c4.idempotent);
  EXPECT_TRUE(c4.not_nilpotent);
  EXPECT_FALSE(structural_predicates(pomtest::null_chain()).not_nilpotent);
}

TEST(NaturalOrder, BooleanDivisibilityIsContainment) {
  FiniteMonoid b = boolean_algebra(3);
  FiniteMonoid n = natural_order(b.elements(), b.op_table());
  for (Index a = 0; a < b.size(); ++a)
    for (Index c = 0; c < b.size(); ++c) EXPECT_EQ(n.le(a, c), (a & c) == a);
  EXPECT_EQ(n, b);
}

TEST(NaturalOrder, ChainAndGroup) {
  FiniteMonoid c = chain(3);
  EXPECT_EQ(natural_order(c.elements(), c.op_table()).leq_table(), c.leq_table());
  EXPECT_THROW(natural_order({"1", "a"}, {{0, 1}, {1, 0}}), DomainError);
}

TEST(Perp, Examples) {
  FiniteMonoid b = boolean_algebra(3);
  // {a} has mask 1; its perp is every subset of {b,c}.
  EXPECT_EQ(perp(b, idx(b, {1})), idx(b, {0, 2, 4, 6}));
  EXPECT_EQ(perp(b, ElementSubset(b.size())), ElementSubset::full(b.size()));
  EXPECT_EQ(perp(b, idx(b, {b.unit()})), idx(b, {b.zero()}));
}

TEST(Products, SmallCases) {
  EXPECT_TRUE(find_isomorphism(product_monoid(chain(2), 2), boolean_algebra(2)).has_value());
  EXPECT_TRUE(find_isomorphism(product_monoid(boolean_algebra(2), 1), boolean_algebra(2)).has_value());
  FiniteMonoid g = product_monoid(chain(3), 2);
  EXPECT_EQ(g.size(), 9U);
  EXPECT_TRUE(verify_axioms(g).all());
  EXPECT_TRUE(find_isomorphism(g, grid(2, 2)).has_value());
  EXPECT_THROW(product_monoid(chain(2), 0), DomainError);
  EXPECT_THROW(product_monoid(chain(4), 10, 1000), GuardExceeded);
}

TEST(Embedding, PointEvaluationMonoid) {
  PointEmbedding two = embed_points(chain(2), 2);
  EXPECT_EQ(two.monoid.size(), 4U);
  EXPECT_TRUE(verify_axioms(two.monoid).all());
  EXPECT_EQ(two.point_map.size(), 2U);
  EXPECT_NE(two.point_map[0], two.point_map[1]);

  PointEmbedding one = embed_points(chain(2), 1);
  EXPECT_EQ(one.monoid.size(), 2U);

  PointEmbedding b = embed_points(boolean_algebra(2), 2);
  EXPECT_TRUE(verify_axioms(b.monoid).all());
  EXPECT_TRUE(structural_predicates(b.monoid).idempotent);
  EXPECT_TRUE(structural_predicates(b.monoid).not_nilpotent);
}

TEST(Embedding, ClosesUnderPowersInNonIdempotentMonoids) {
  // In E(1,2) the evaluation map squared is a new function.
  PointEmbedding e = embed_points(capped_exponent(1, 2), 1);
  EXPECT_EQ(e.monoid.size(), 3U);
  EXPECT_EQ(e.monoid.name(e.monoid.zero()), "x1^2");
  EXPECT_TRUE(verify_axioms(e.monoid).all());
  for (const auto& c : pomtest::catalog_up_to(4))
    for (std::size_t k = 1; k <= 2; ++k) EXPECT_TRUE(verify_axioms(embed_points(c.m, k).monoid).all()) << c.name;
}

TEST(Embedding, ValuesArePointwiseProducts) {
  PointEmbedding e = embed_points(chain(3), 2);
  const FiniteMonoid& w = e.monoid;
  for (Index a = 0; a < w.size(); ++a)
    for (Index b = 0; b < w.size(); ++b)
      for (Index x = 0; x < e.product.size(); ++x)
        EXPECT_EQ(e.values[w.mul(a, b)][x], chain(3).mul(e.values[a][x], e.values[b][x]));
}

TEST(AdjoinUnit, ReconstructsKnownMonoids) {
  EXPECT_TRUE(find_isomorphism(adjoin_unit({"0"}, {{0}}, {{true}}), chain(2)).has_value());

  FiniteMonoid c3 = chain(3);
  std::vector<std::vector<Index>> op = {{0, 0}, {0, 1}};
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};
  EXPECT_TRUE(find_isomorphism(adjoin_unit({"0", "m"}, op, leq), c3).has_value());

  FiniteMonoid e = capped_exponent(2, 2);
  std::vector<Index> keep;
  for (Index f = 0; f < e.size(); ++f)
    if (f != e.unit()) keep.push_back(f);
  const std::size_t n = keep.size();
  std::vector<std::string> names;
  std::vector<std::vector<Index>> sop(n, std::vector<Index>(n));
  std::vector<std::vector<bool>> sleq(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a) {
    names.push_back(e.name(keep[a]));
    for (Index b = 0; b < n; ++b) {
      Index v = e.mul(keep[a], keep[b]);
      sop[a][b] = static_cast<Index>(std::find(keep.begin(), keep.end(), v) - keep.begin());
      sleq[a][b] = e.le(keep[a], keep[b]);
    }
  }
  FiniteMonoid rebuilt = adjoin_unit(names, sop, sleq, "(0,0)");
  EXPECT_TRUE(find_isomorphism(rebuilt, e).has_value());
}

TEST(AdjoinUnit, RejectsNonContractiveSemigroup) {
  EXPECT_THROW(adjoin_unit({"0", "x"}, {{1, 1}, {1, 1}}, {{true, true}, {false, true}}), DomainError);
}

TEST(Generators, SizesAndShapes) {
  EXPECT_EQ(boolean_algebra(3).size(), 8U);
  EXPECT_TRUE(structural_predicates(boolean_algebra(3)).idempotent);
  EXPECT_TRUE(find_isomorphism(grid(2, 1), boolean_algebra(2)).has_value());
  FiniteMonoid e = capped_exponent(3, 2);
  EXPECT_EQ(e.name(13), "(1,1,1)");
  EXPECT_EQ(e.name(e.unit()), "(0,0,0)");
  EXPECT_EQ(e.name(e.zero()), "(2,2,2)");
  EXPECT_THROW(chain(0), DomainError);
  EXPECT_THROW(boolean_algebra(13, 4096), GuardExceeded);
}

TEST(Subset, SetAlgebra) {
  ElementSubset a = ElementSubset::of(5, {0, 2});
  ElementSubset b = ElementSubset::of(5, {2, 3});
  EXPECT_EQ((a & b), ElementSubset::of(5, {2}));
  EXPECT_EQ((a | b), ElementSubset::of(5, {0, 2, 3}));
  EXPECT_EQ((a - b), ElementSubset::of(5, {0}));
  EXPECT_EQ(a.complement(), ElementSubset::of(5, {1, 3, 4}));
  EXPECT_TRUE(ElementSubset::of(5, {2}).is_subset_of(a));
  EXPECT_THROW((void)(a & ElementSubset(4)), StructuralError);
}
