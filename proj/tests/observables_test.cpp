#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "olson/effect.hpp"
#include "olson/observable.hpp"

namespace olson {
namespace {

using R = Rational;

std::shared_ptr<const MvChain> mv4() { return std::make_shared<const MvChain>(4); }

template <EffectAlgebra A>
using Obs = SimpleObservable<A>;

TEST(Question, ResolutionsMatchTheQuestionStepFunction) {
  auto c = mv4();
  auto q = Obs<MvChain>::question(c, c->element(2));
  EXPECT_EQ(q.resolution_open(R(7, 10)), c->element(2));
  EXPECT_EQ(q.resolution_open(R(0)), c->zero());
  EXPECT_EQ(q.resolution_open(R(1)), c->element(2));
  EXPECT_EQ(q.resolution_closed(R(1)), c->one());
  EXPECT_EQ(q.resolution_open(R(3, 2)), c->one());
  EXPECT_EQ(q.spectrum(), (std::vector<R>{0, 1}));
}

TEST(Question, DegenerateCases) {
  auto c = mv4();
  auto q0 = Obs<MvChain>::question(c, c->zero());
  EXPECT_EQ(q0.spectrum(), std::vector<R>{0});
  EXPECT_EQ(q0.weights().front(), c->one());
  EXPECT_EQ(q0, Obs<MvChain>::constant(c, 0));
  auto q1 = Obs<MvChain>::question(c, c->one());
  EXPECT_EQ(q1.spectrum(), std::vector<R>{1});
}

TEST(Question, EvaluateAtOneGivesTheElement) {
  auto s = std::make_shared<const SetAlgebra>(2);
  auto a = s->element(make_set({0}));
  auto q = Obs<SetAlgebra>::question(s, a);
  EXPECT_EQ(q.evaluate(BorelSet::interval(R(1, 2), false, R(3, 2), false)), a);
  EXPECT_EQ(q.question_element(), a);
  EXPECT_TRUE(q.is_question());
}

TEST(Question, ForeignElementRejected) {
  auto c = mv4();
  MvChain other(4);
  EXPECT_THROW(Obs<MvChain>::question(c, other.element(1)), Error);
}

TEST(FromWeights, EvaluateSumsWeightsInsideTheSet) {
  auto c = mv4();
  auto x = Obs<MvChain>::from_weights(c, {0, R(1, 2), 1}, {c->element(1), c->element(1), c->element(2)});
  EXPECT_EQ(x.evaluate(BorelSet::interval(R(1, 2), true, 1, true)), c->element(3));
  EXPECT_EQ(x.evaluate(BorelSet::interval(R(1, 4), false, R(3, 4), false)), c->element(1));
  EXPECT_EQ(x.evaluate(BorelSet::reals()), c->one());
  EXPECT_EQ(x.evaluate(BorelSet::empty()), c->zero());
  EXPECT_EQ(x.resolution_closed(R(1, 2)), c->element(2));
  EXPECT_EQ(x.spectrum(), (std::vector<R>{0, R(1, 2), 1}));
}

TEST(FromWeights, Errors) {
  auto c = mv4();
  try {
    Obs<MvChain>::from_weights(c, {0, 1}, {c->element(3), c->element(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightsNotSummable);
  }
  try {
    Obs<MvChain>::from_weights(c, {0, 1}, {c->element(1), c->element(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightsNotSummable);
  }
  try {
    Obs<MvChain>::from_weights(c, {1, 0}, {c->element(2), c->element(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIncreasingPoints);
  }
}

TEST(FromWeights, ComplementaryPairIsAQuestion) {
  auto c = mv4();
  for (const auto& a : c->enumerate())
    EXPECT_EQ(Obs<MvChain>::from_weights(c, {0, 1}, {c->complement(a), a}), Obs<MvChain>::question(c, a));
}

TEST(FromWeights, ZeroWeightsLeaveTheSpectrum) {
  auto c = mv4();
  auto x = Obs<MvChain>::from_weights(c, {0, R(1, 2), 1}, {c->element(2), c->zero(), c->element(2)});
  EXPECT_EQ(x.spectrum(), (std::vector<R>{0, 1}));
}

TEST(Evaluate, AdditiveAndComplementing) {
  auto s = std::make_shared<const SetAlgebra>(3);
  auto x = Obs<SetAlgebra>::from_weights(s, {-1, 0, 2},
                                         {s->element(make_set({0})), s->element(make_set({1})), s->element(make_set({2}))});
  std::vector<BorelSet> sets{BorelSet::below(0, false), BorelSet::below(0, true), BorelSet::point(2),
                             BorelSet::interval(-1, true, 0, false), BorelSet::above(0, false), BorelSet::points({-1, 2})};
  for (const auto& e : sets) {
    EXPECT_EQ(x.evaluate(e.complement()), s->complement(x.evaluate(e))) << e.str();
    for (const auto& f : sets)
      if (e.intersect(f).is_empty()) EXPECT_EQ(x.evaluate(e.unite(f)), s->add(x.evaluate(e), x.evaluate(f)));
  }
}

TEST(Resolution, MonotoneAndBounded) {
  auto c = mv4();
  auto x = Obs<MvChain>::from_weights(c, {-1, R(1, 3), 2}, {c->element(1), c->element(2), c->element(1)});
  EXPECT_EQ(x.resolution_open(-1), c->zero());
  EXPECT_EQ(x.resolution_open(-5), c->zero());
  EXPECT_EQ(x.resolution_open(R(5, 2)), c->one());
  R prev_t(-3);
  for (int k = -12; k <= 12; ++k) {
    R t(k, 4);
    EXPECT_TRUE(c->leq(x.resolution_open(prev_t), x.resolution_open(t)));
    EXPECT_TRUE(c->leq(x.resolution_open(t), x.resolution_closed(t)));
    // closed value equals the open value just to the right
    EXPECT_EQ(x.resolution_closed(t), x.resolution_open(t + R(1, 1000)));
    prev_t = t;
  }
}

TEST(ApplyMap, SquareMergesSymmetricPoints) {
  auto c = std::make_shared<const MvChain>(6);
  auto a = c->element(1), b = c->element(2), d = c->element(3);
  auto x = Obs<MvChain>::from_weights(c, {-1, 0, 1}, {a, b, d});
  auto sq = PiecewiseMap::interpolating({-1, 0, 1}, {1, 0, 1}, "t^2");
  auto y = x.apply_map(sq);
  EXPECT_EQ(y.spectrum(), (std::vector<R>{0, 1}));
  EXPECT_EQ(y.weights(), (std::vector<MvChain::element_type>{b, *c->add(a, d)}));
}

TEST(ApplyMap, IdentityConstantAndUndefined) {
  auto c = mv4();
  auto x = Obs<MvChain>::from_weights(c, {0, R(1, 2), 1}, {c->element(1), c->element(1), c->element(2)});
  EXPECT_EQ(x.apply_map(PiecewiseMap::identity()), x);
  EXPECT_EQ(x.apply_map(PiecewiseMap::constant(0)), Obs<MvChain>::question(c, c->zero()));
  auto partial = PiecewiseMap::interpolating({0, R(1, 2)}, {0, 1});
  try {
    (void)x.apply_map(partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MapUndefinedOnSpectrum);
  }
}

TEST(ApplyMap, PreimageEvaluationAndComposition) {
  auto s = std::make_shared<const SetAlgebra>(4);
  auto x = Obs<SetAlgebra>::from_weights(s, {0, R(1, 4), R(1, 2), 1},
                                         {s->element(make_set({0})), s->element(make_set({1})), s->element(make_set({2})),
                                          s->element(make_set({3}))});
  auto f = PiecewiseMap::min_with_reflection();
  auto g = PiecewiseMap::affine(2, -1);
  auto fx = x.apply_map(f);
  // f(x)(E) = x(f⁻¹(E)) checked on every subset of the image grid
  const auto image = fx.spectrum();
  for (std::uint32_t mask = 0; mask < (1u << image.size()); ++mask) {
    std::vector<R> chosen;
    for (std::size_t i = 0; i < image.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(image[i]);
    std::vector<R> pre;
    for (const auto& u : x.spectrum())
      if (std::find(chosen.begin(), chosen.end(), *f.apply(u)) != chosen.end()) pre.push_back(u);
    EXPECT_EQ(fx.evaluate(BorelSet::points(chosen)), x.evaluate(BorelSet::points(pre)));
  }
  auto composed = PiecewiseMap::interpolating({0, R(1, 2), 1}, {-1, 0, -1});
  EXPECT_EQ(fx.apply_map(g), x.apply_map(composed));
}

TEST(Negate, Questions) {
  auto c = mv4();
  for (const auto& a : c->enumerate())
    EXPECT_EQ(Obs<MvChain>::question(c, a).negate(), Obs<MvChain>::question(c, c->complement(a)));
  EXPECT_EQ(Obs<MvChain>::question(c, c->zero()).negate(), Obs<MvChain>::question(c, c->one()));
}

TEST(Negate, SymmetricSpectrumSwapsWeights) {
  auto c = mv4();
  auto a = c->element(1);
  auto x = Obs<MvChain>::from_weights(c, {R(1, 4), R(3, 4)}, {a, c->complement(a)});
  auto xn = x.negate();
  EXPECT_EQ(xn.spectrum(), (std::vector<R>{R(1, 4), R(3, 4)}));
  EXPECT_EQ(xn.weights(), (std::vector<MvChain::element_type>{c->complement(a), a}));
  EXPECT_EQ(xn.negate(), x);
}

TEST(Negate, OutsideUnitIntervalRejected) {
  auto c = mv4();
  auto x = Obs<MvChain>::from_weights(c, {R(-1, 2), 1}, {c->element(2), c->element(2)});
  try {
    (void)x.negate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpectrumOutsideUnitInterval);
  }
}

TEST(Sharpness, QuestionsInheritElementSharpness) {
  auto c = mv4();
  for (const auto& a : c->enumerate())
    EXPECT_EQ(Obs<MvChain>::question(c, a).is_sharp_observable(), is_sharp(*c, a));
  auto half = Obs<MvChain>::from_weights(c, {0, 1}, {c->element(2), c->element(2)});
  EXPECT_FALSE(half.is_sharp_observable());
  auto s = std::make_shared<const SetAlgebra>(3);
  auto x = Obs<SetAlgebra>::from_weights(s, {0, R(1, 3), 1},
                                         {s->element(make_set({0})), s->element(make_set({1})), s->element(make_set({2}))});
  EXPECT_TRUE(x.is_sharp_observable());
}

TEST(Sharpness, ScanCap) {
  auto c = std::make_shared<const MvChain>(30);
  std::vector<R> pts;
  std::vector<MvChain::element_type> ws;
  for (int i = 0; i < 30; ++i) {
    pts.emplace_back(i);
    ws.push_back(c->element(1));
  }
  auto x = Obs<MvChain>::from_weights(c, pts, ws);
  try {
    (void)x.is_sharp_observable();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpectrumTooLargeForSharpnessScan);
  }
}

TEST(StepResolution, RoundTripsWithObservables) {
  auto c = std::make_shared<const MvChain>(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<R> pts;
    std::vector<MvChain::element_type> ws;
    int left = 3, p = static_cast<int>(rng() % 3);
    while (left > 0) {
      int w = 1 + static_cast<int>(rng() % static_cast<unsigned>(left));
      pts.emplace_back(p, 2);
      ws.push_back(c->element(w));
      left -= w;
      p += 1 + static_cast<int>(rng() % 2);
    }
    auto x = Obs<MvChain>::from_weights(c, pts, ws);
    StepResolution<MvChain> r(x);
    EXPECT_EQ(r.to_observable(), x);
    EXPECT_EQ(StepResolution<MvChain>(r.to_observable()), r);
    for (int k = -2; k < 12; ++k) EXPECT_EQ(r.at(R(k, 4)), x.resolution_open(R(k, 4)));
  }
}

TEST(StepResolution, CanonicalizesAndValidates) {
  auto c = mv4();
  StepResolution<MvChain> r(c, {0, 1, 2}, {c->zero(), c->element(2), c->element(2), c->one()});
  EXPECT_EQ(r.breakpoints(), (std::vector<R>{0, 2}));
  EXPECT_THROW(StepResolution<MvChain>(c, {0, 1}, {c->zero(), c->element(3), c->element(2)}), Error);
  EXPECT_THROW(StepResolution<MvChain>(c, {0}, {c->element(1), c->one()}), Error);
  EXPECT_THROW(StepResolution<MvChain>(c, {0}, {c->zero(), c->element(1)}), Error);
}

TEST(Regularize, LeftIsIdentityOnLeftContinuousInput) {
  auto c = mv4();
  auto x = Obs<MvChain>::from_weights(c, {0, R(1, 2), 1}, {c->element(1), c->element(1), c->element(2)});
  auto f = sample_open(x, x.points());
  EXPECT_EQ(left_regularize<MvChain>(c, f).to_observable(), x);
  EXPECT_EQ(left_regularize<MvChain>(c, f), StepResolution<MvChain>(x));
}

TEST(Regularize, RightMovesJumpOntoThePoint) {
  auto c = mv4();
  GridFamily<MvChain> f{{R(1, 2)}, c->zero(), {c->zero()}, {c->one()}};
  auto r = right_regularize(*c, f);
  EXPECT_EQ(r.at.front(), c->one());
  EXPECT_EQ(r.below, c->zero());
  EXPECT_EQ(observable_from_closed<MvChain>(c, r), Obs<MvChain>::constant(c, R(1, 2)));
}

TEST(Regularize, RightOfLeftIsTheClosedFamily) {
  auto c = std::make_shared<const MvChain>(3);
  // every monotone family on a 2-point grid
  auto E = c->enumerate();
  std::vector<R> grid{0, 1};
  for (const auto& a0 : E)
    for (const auto& b0 : E)
      for (const auto& a1 : E) {
        if (!c->leq(a0, b0) || !c->leq(b0, a1)) continue;
        GridFamily<MvChain> f{grid, c->zero(), {a0, a1}, {b0, c->one()}};
        auto x = left_regularize<MvChain>(c, f).to_observable();
        auto r = right_regularize(*c, sample_open(x, grid));
        EXPECT_EQ(r, sample_closed(x, grid));
      }
}

TEST(Regularize, NonMonotoneRejected) {
  auto c = mv4();
  GridFamily<MvChain> f{{0}, c->element(2), {c->element(1)}, {c->one()}};
  try {
    (void)right_regularize(*c, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonMonotoneInput);
  }
}

TEST(BorelSet, NormalizationAndMembership) {
  auto u = BorelSet::interval(0, true, 1, false).unite(BorelSet::interval(1, true, 2, true));
  EXPECT_EQ(u, BorelSet::interval(0, true, 2, true));
  EXPECT_TRUE(u.contains(1));
  EXPECT_FALSE(u.contains(R(5, 2)));
  auto gap = BorelSet::interval(0, true, 1, false).unite(BorelSet::interval(1, false, 2, true));
  EXPECT_FALSE(gap.contains(1));
  EXPECT_EQ(gap.complement(), BorelSet::below(0, false).unite(BorelSet::point(1)).unite(BorelSet::above(2, false)));
  EXPECT_EQ(BorelSet::reals().complement(), BorelSet::empty());
}

}  // namespace
}  // namespace olson
