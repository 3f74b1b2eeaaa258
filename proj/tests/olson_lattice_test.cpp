#include <gtest/gtest.h>

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "olson/effect.hpp"
#include "olson/lattice.hpp"
#include "olson/observable.hpp"
#include "support.hpp"

namespace olson {
namespace {

using R = Rational;
template <EffectAlgebra A>
using Obs = SimpleObservable<A>;

// Independent order oracle: compares open resolutions at every grid point
// and at a dense set of rationals between them.
template <EffectAlgebra A>
bool oracle_leq(const Obs<A>& x, const Obs<A>& y) {
  std::vector<R> ts;
  for (const auto* z : {&x, &y})
    for (const auto& p : z->points())
      for (int k = -2; k <= 2; ++k) ts.push_back(p + R(k, 7));
  for (const auto& t : ts)
    if (!x.algebra().leq(y.resolution_open(t), x.resolution_open(t))) return false;
  return true;
}

template <EffectAlgebra A>
std::optional<Obs<A>> oracle_bound(const std::vector<Obs<A>>& all, const std::vector<Obs<A>>& xs, bool upper) {
  std::vector<const Obs<A>*> bounds;
  for (const auto& z : all) {
    bool ok = true;
    for (const auto& x : xs) ok = ok && (upper ? oracle_leq(x, z) : oracle_leq(z, x));
    if (ok) bounds.push_back(&z);
  }
  for (const auto* g : bounds) {
    bool extreme = true;
    for (const auto* z : bounds) extreme = extreme && (upper ? oracle_leq(*g, *z) : oracle_leq(*z, *g));
    if (extreme) return *g;
  }
  return std::nullopt;
}

template <FiniteEffectAlgebra A>
void expect_partial_order(const std::shared_ptr<const A>& alg, std::size_t expected) {
  auto all = enumerate_grid_observables(alg, {0, R(1, 2), 1});
  EXPECT_EQ(all.size(), expected);
  for (const auto& x : all) {
    EXPECT_TRUE(olson_leq(x, x));
    for (const auto& y : all) {
      EXPECT_EQ(olson_leq(x, y), oracle_leq(x, y));
      if (olson_leq(x, y) && olson_leq(y, x)) EXPECT_EQ(x, y);
      for (const auto& z : all)
        if (olson_leq(x, y) && olson_leq(y, z)) EXPECT_TRUE(olson_leq(x, z));
    }
  }
}

TEST(OlsonOrder, PartialOrderOnSmallGrids) {
  expect_partial_order<MvChain>(std::make_shared<const MvChain>(2), 6);
  expect_partial_order<SetAlgebra>(std::make_shared<const SetAlgebra>(2), 9);
}

TEST(OlsonOrder, QuestionsEmbedTheAlgebra) {
  auto c = std::make_shared<const MvChain>(4);
  auto t = testing::non_lattice_table();
  for (const auto& a : c->enumerate())
    for (const auto& b : c->enumerate())
      EXPECT_EQ(olson_leq(Obs<MvChain>::question(c, a), Obs<MvChain>::question(c, b)), c->leq(a, b));
  for (const auto& a : t->enumerate())
    for (const auto& b : t->enumerate())
      EXPECT_EQ(olson_leq(Obs<TableAlgebra>::question(t, a), Obs<TableAlgebra>::question(t, b)), t->leq(a, b));
}

TEST(OlsonOrder, QuestionBoundsOnUnitIntervalObservables) {
  auto c = std::make_shared<const MvChain>(2);
  auto q0 = Obs<MvChain>::question(c, c->zero());
  auto q1 = Obs<MvChain>::question(c, c->one());
  for (const auto& x : enumerate_grid_observables<MvChain>(c, {0, R(1, 3), 1})) {
    EXPECT_TRUE(olson_leq(q0, x));
    EXPECT_TRUE(olson_leq(x, q1));
  }
}

TEST(OlsonOrder, CompareReportsWitnesses) {
  auto s = std::make_shared<const SetAlgebra>(2);
  auto qa = Obs<SetAlgebra>::question(s, s->element(make_set({0})));
  auto qb = Obs<SetAlgebra>::question(s, s->element(make_set({1})));
  auto c = olson_compare(qa, qb);
  EXPECT_EQ(c.verdict, Verdict::Incomparable);
  ASSERT_TRUE(c.witness_leq && c.witness_geq);
  EXPECT_FALSE(s->leq(qb.resolution_open(*c.witness_leq), qa.resolution_open(*c.witness_leq)));
  EXPECT_EQ(olson_compare(qa, qa).verdict, Verdict::Equal);
  auto q1 = Obs<SetAlgebra>::question(s, s->one());
  auto lt = olson_compare(qa, q1);
  EXPECT_EQ(lt.verdict, Verdict::LessOrEqual);
  EXPECT_FALSE(lt.witness_leq.has_value());
  EXPECT_TRUE(lt.witness_geq.has_value());
  EXPECT_EQ(olson_compare(q1, qa).verdict, Verdict::GreaterOrEqual);
}

TEST(OlsonOrder, BackendMismatch) {
  auto a = std::make_shared<const MvChain>(2);
  auto b = std::make_shared<const MvChain>(2);
  try {
    (void)olson_leq(Obs<MvChain>::question(a, a->one()), Obs<MvChain>::question(b, b->one()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BackendMismatch);
  }
}

TEST(OlsonMeet, ExampleOnTheFourStepChain) {
  auto c = std::make_shared<const MvChain>(4);
  std::vector<R> grid{0, R(1, 2), 1};
  auto x = Obs<MvChain>::from_weights(c, grid, {c->element(1), c->element(1), c->element(2)});
  auto y = Obs<MvChain>::from_weights(c, grid, {c->element(2), c->element(1), c->element(1)});
  auto m = olson_meet<MvChain>({x, y});
  ASSERT_TRUE(m.exists());
  EXPECT_EQ(m.certified, Certification::Formula);
  EXPECT_EQ(m.value->resolution_closed(0), c->element(2));
  EXPECT_EQ(m.value->resolution_closed(R(1, 2)), c->element(3));
  EXPECT_EQ(m.value->resolution_closed(1), c->one());
  auto all = enumerate_grid_observables<MvChain>(c, grid);
  EXPECT_EQ(oracle_bound<MvChain>(all, {x, y}, false), m.value);
}

TEST(OlsonMeet, QuestionsOnSets) {
  auto s = std::make_shared<const SetAlgebra>(3);
  for (const auto& a : s->enumerate())
    for (const auto& b : s->enumerate()) {
      auto qa = Obs<SetAlgebra>::question(s, a), qb = Obs<SetAlgebra>::question(s, b);
      EXPECT_EQ(meet_of(qa, qb), Obs<SetAlgebra>::question(s, *s->meet(a, b)));
      EXPECT_EQ(join_of(qa, qb), Obs<SetAlgebra>::question(s, *s->join(a, b)));
    }
}

TEST(OlsonMeet, IdempotentAndBoundedByQuestions) {
  auto c = std::make_shared<const MvChain>(3);
  auto q0 = Obs<MvChain>::question(c, c->zero());
  for (const auto& x : enumerate_grid_observables<MvChain>(c, {0, R(1, 2), 1})) {
    EXPECT_EQ(meet_of(x, x), x);
    EXPECT_EQ(join_of(x, x), x);
    EXPECT_EQ(join_of(q0, x), x);
    EXPECT_EQ(meet_of(q0, x), q0);
  }
}

TEST(OlsonMeet, EmptyFamilyRejected) {
  try {
    (void)olson_meet<MvChain>({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyFamily);
  }
  EXPECT_THROW((void)olson_join<MvChain>({}), Error);
}

template <FiniteEffectAlgebra A>
void expect_oracle_agreement(const std::shared_ptr<const A>& alg, const std::vector<R>& grid, bool triples) {
  auto all = enumerate_grid_observables(alg, grid);
  auto check = [&](const std::vector<Obs<A>>& xs) {
    auto m = olson_meet(xs);
    auto j = olson_join(xs);
    EXPECT_EQ(m.value, oracle_bound(all, xs, false));
    EXPECT_EQ(j.value, oracle_bound(all, xs, true));
  };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t k = i; k < all.size(); ++k) {
      check({all[i], all[k]});
      if (triples)
        for (std::size_t l = k; l < all.size(); ++l) check({all[i], all[k], all[l]});
    }
}

TEST(OlsonMeet, AgreesWithBruteForceOnMvChain) {
  expect_oracle_agreement<MvChain>(std::make_shared<const MvChain>(2), {0, R(1, 2), 1}, true);
}

TEST(OlsonMeet, AgreesWithBruteForceOnSets) {
  expect_oracle_agreement<SetAlgebra>(std::make_shared<const SetAlgebra>(2), {-1, 0, 1}, true);
}

TEST(OlsonMeet, AgreesWithBruteForceOnTribe) {
  expect_oracle_agreement<FiniteTribe>(std::make_shared<const FiniteTribe>(2, 2), {0, R(1, 2), 1}, false);
}

TEST(OlsonMeet, NonLatticeTableCertifiedByEnumeration) {
  std::shared_ptr<const TableAlgebra> t = testing::non_lattice_table();
  std::vector<R> grid{0, 1};
  auto all = enumerate_grid_observables(t, grid);
  int missing = 0, exhaustive = 0;
  for (const auto& a : t->enumerate())
    for (const auto& b : t->enumerate()) {
      auto qa = Obs<TableAlgebra>::question(t, a), qb = Obs<TableAlgebra>::question(t, b);
      auto m = olson_meet<TableAlgebra>({qa, qb});
      auto j = olson_join<TableAlgebra>({qa, qb});
      EXPECT_EQ(m.value, oracle_bound<TableAlgebra>(all, {qa, qb}, false));
      EXPECT_EQ(j.value, oracle_bound<TableAlgebra>(all, {qa, qb}, true));
      // the elementwise criterion and the enumeration agree
      EXPECT_EQ(m.exists(), t->meet(a, b).has_value());
      EXPECT_EQ(j.exists(), t->join(a, b).has_value());
      if (!m.exists()) ++missing;
      if (m.certified == Certification::Exhaustive) ++exhaustive;
    }
  EXPECT_GT(missing, 0);
  EXPECT_EQ(missing, exhaustive);
}

TEST(OlsonMeet, NonLatticeTableGeneralObservables) {
  std::shared_ptr<const TableAlgebra> t = testing::non_lattice_table();
  std::vector<R> grid{0, R(1, 2), 1};
  auto all = enumerate_grid_observables(t, grid);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& x = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    EXPECT_EQ(olson_meet<TableAlgebra>({x, y}).value, oracle_bound<TableAlgebra>(all, {x, y}, false));
    EXPECT_EQ(olson_join<TableAlgebra>({x, y}).value, oracle_bound<TableAlgebra>(all, {x, y}, true));
  }
}

TEST(OlsonLattice, LatticeLawsOnRandomTriples) {
  auto f = std::make_shared<const FiniteTribe>(2, 3);
  auto all = enumerate_grid_observables<FiniteTribe>(f, {0, R(1, 3), R(2, 3), 1});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    const auto& z = all[rng() % all.size()];
    EXPECT_EQ(meet_of(x, y), meet_of(y, x));
    EXPECT_EQ(join_of(x, y), join_of(y, x));
    EXPECT_EQ(meet_of(meet_of(x, y), z), meet_of(x, meet_of(y, z)));
    EXPECT_EQ(join_of(join_of(x, y), z), join_of(x, join_of(y, z)));
    EXPECT_EQ(meet_of(x, join_of(x, y)), x);
    EXPECT_EQ(join_of(x, meet_of(x, y)), x);
    EXPECT_EQ(*olson_meet<FiniteTribe>({x, y, z}).value, meet_of(meet_of(x, y), z));
    EXPECT_TRUE(olson_leq(meet_of(x, y), x));
    EXPECT_TRUE(olson_leq(y, join_of(x, y)));
  }
}

TEST(OlsonLattice, DeMorgan) {
  auto c = std::make_shared<const MvChain>(3);
  auto all = enumerate_grid_observables<MvChain>(c, {0, R(1, 4), R(3, 4), 1});
  for (const auto& x : all)
    for (const auto& y : all) {
      EXPECT_EQ(meet_of(x, y).negate(), join_of(x.negate(), y.negate()));
      EXPECT_EQ(join_of(x, y).negate(), meet_of(x.negate(), y.negate()));
    }
}

TEST(OlsonLattice, QuestionLatticeEmbedding) {
  auto f = std::make_shared<const FiniteTribe>(2, 2);
  for (const auto& a : f->enumerate())
    for (const auto& b : f->enumerate()) {
      auto qa = Obs<FiniteTribe>::question(f, a), qb = Obs<FiniteTribe>::question(f, b);
      EXPECT_EQ(meet_of(qa, qb), Obs<FiniteTribe>::question(f, *f->meet(a, b)));
      EXPECT_EQ(join_of(qa, qb), Obs<FiniteTribe>::question(f, *f->join(a, b)));
    }
}

TEST(Involution, ComparableQuestionsOnSets) {
  auto s = std::make_shared<const SetAlgebra>(3);
  for (const auto& a : s->enumerate())
    for (const auto& b : s->enumerate()) {
      if (!s->leq(a, b)) continue;
      auto qa = Obs<SetAlgebra>::question(s, a), qb = Obs<SetAlgebra>::question(s, b);
      auto r = involution_suite(qa, qb);
      EXPECT_TRUE(r.all_passed()) << s->describe(a) << " " << s->describe(b);
      EXPECT_TRUE(olson_leq(qb.negate(), qa.negate()));
      EXPECT_TRUE(r.find("viii_sharp_question")->applicable);
    }
}

template <FiniteEffectAlgebra A>
void expect_involution_except_vii(const Obs<A>& x, const Obs<A>& y) {
  auto r = involution_suite(x, y);
  for (const auto& c : r.checks) {
    if (c.informational) continue;
    if (c.name == "vii_min_max_bounds") {
      // holds exactly when x ∧ x⁻ = g(x) for both inputs
      bool eq = true;
      for (const auto* z : {&x, &y})
        eq = eq && meet_of(*z, z->negate()) == z->apply_map(PiecewiseMap::min_with_reflection()) &&
             join_of(*z, z->negate()) == z->apply_map(PiecewiseMap::max_with_reflection());
      EXPECT_EQ(c.passed, eq) << x.str() << " " << y.str();
    } else {
      EXPECT_TRUE(c.passed) << c.name << " " << x.str() << " " << y.str();
    }
  }
}

TEST(Involution, ComparableQuestionsOnTheChain) {
  auto c = std::make_shared<const MvChain>(4);
  for (const auto& a : c->enumerate())
    for (const auto& b : c->enumerate()) {
      if (!c->leq(a, b)) continue;
      auto qa = Obs<MvChain>::question(c, a), qb = Obs<MvChain>::question(c, b);
      expect_involution_except_vii(qa, qb);
      auto r = involution_suite(qa, qb);
      EXPECT_EQ(r.find("vii_min_max_bounds")->passed, is_sharp(*c, a) && is_sharp(*c, b));
    }
}

TEST(Involution, GridObservablesOnSets) {
  auto s = std::make_shared<const SetAlgebra>(2);
  auto all = enumerate_grid_observables<SetAlgebra>(s, {0, R(1, 2), 1});
  for (const auto& x : all)
    for (const auto& y : all) EXPECT_TRUE(involution_suite(x, y).all_passed());
}

TEST(Involution, GridObservablesOnTribe) {
  auto f = std::make_shared<const FiniteTribe>(2, 2);
  auto all = enumerate_grid_observables<FiniteTribe>(f, {0, R(1, 2), 1});
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t k = 0; k < all.size(); k += 5) expect_involution_except_vii(all[i], all[k]);
}

TEST(Involution, StatedMinBoundFailsOffBooleanBackends) {
  auto c = std::make_shared<const MvChain>(4);
  auto x = Obs<MvChain>::question(c, c->element(1));
  auto lo = meet_of(x, x.negate());
  auto gx = x.apply_map(PiecewiseMap::min_with_reflection());
  EXPECT_EQ(lo, Obs<MvChain>::question(c, c->element(1)));
  EXPECT_EQ(gx, Obs<MvChain>::question(c, c->zero()));
  EXPECT_FALSE(olson_leq(lo, gx));
  EXPECT_TRUE(olson_leq(gx, lo));
}

TEST(Involution, HalfIsAFixedPoint) {
  auto c = std::make_shared<const MvChain>(4);
  auto x = Obs<MvChain>::constant(c, R(1, 2));
  EXPECT_EQ(x.negate(), x);
  EXPECT_EQ(meet_of(x, x.negate()), x);
}

TEST(Involution, SharpObservableWhoseMeetWithNegationIsNotBottom) {
  auto s = std::make_shared<const SetAlgebra>(3);
  // x = x_f for f = (0, 3/10, 1) on three points
  auto x = Obs<SetAlgebra>::from_weights(s, {0, R(3, 10), 1},
                                         {s->element(make_set({0})), s->element(make_set({1})), s->element(make_set({2}))});
  ASSERT_TRUE(x.is_sharp_observable());
  auto q0 = Obs<SetAlgebra>::question(s, s->zero());
  auto m = meet_of(x, x.negate());
  EXPECT_NE(m, q0);
  // x_{min(f, 1-f)} = x_{(0, 3/10, 0)}
  auto expected = Obs<SetAlgebra>::from_weights(s, {0, R(3, 10)}, {s->element(make_set({0, 2})), s->element(make_set({1}))});
  EXPECT_EQ(m, expected);
  EXPECT_TRUE(involution_suite(x, x).all_passed());
}

TEST(Involution, LiteralHIsNotTrivial) {
  auto s = std::make_shared<const SetAlgebra>(2);
  auto x = Obs<SetAlgebra>::from_weights(s, {0, R(1, 2)}, {s->element(make_set({0})), s->element(make_set({1}))});
  auto r = involution_suite(x, x);
  EXPECT_TRUE(r.all_passed());
  const auto* lit = r.find("vii_literal_h");
  ASSERT_NE(lit, nullptr);
  EXPECT_TRUE(lit->informational);
  // h(x) is q_1, while x ∨ x⁻ keeps mass at 1/2
  EXPECT_FALSE(lit->passed);
  EXPECT_EQ(x.apply_map(PiecewiseMap::max_one_reflection()), Obs<SetAlgebra>::question(s, s->one()));
  EXPECT_NE(join_of(x, x.negate()), Obs<SetAlgebra>::question(s, s->one()));
}

TEST(Involution, SpectrumOutsideUnitIntervalRejected) {
  auto c = std::make_shared<const MvChain>(2);
  auto x = Obs<MvChain>::constant(c, 2);
  try {
    (void)involution_suite(x, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpectrumOutsideUnitInterval);
  }
}

}  // namespace
}  // namespace olson
