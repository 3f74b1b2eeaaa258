#ifndef OLSON_CHECK_SUITES_HPP
#define OLSON_CHECK_SUITES_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "olson/effect.hpp"
#include "olson/hilbert.hpp"
#include "olson/io/codec.hpp"
#include "olson/kernel.hpp"
#include "olson/lattice.hpp"
#include "olson/observable.hpp"

namespace olson::check {

using io::Json;

struct Options {
  std::uint64_t seed = 0;
  /// Largest number of tuples (pairs or triples) examined per property;
  /// beyond that, tuples are drawn at random. Also bounds enumerations.
  std::size_t cap = 1'000'000;
  hilbert::Tolerances tol;
};

struct Property {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  Json counterexample = nullptr;
  bool informational = false;

  /// Counts one instance; the first failure keeps its witness.
  template <class Witness>
  void record(bool ok, Witness&& witness) {
    ++checked;
    if (!ok && passed) {
      passed = false;
      counterexample = witness();
    }
  }
};

struct Report {
  std::string suite;
  Json backend;
  std::deque<Property> properties;
  Json extra = Json::object();

  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.informational || p.passed; });
  }

  Property& add(std::string name, bool informational = false) {
    properties.push_back({std::move(name), true, 0, nullptr, informational});
    return properties.back();
  }

  Json to_json() const {
    Json props = Json::array();
    for (const auto& p : properties) {
      Json j{{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}, {"counterexample", p.counterexample}};
      if (p.informational) j["informational"] = true;
      props.push_back(j);
    }
    Json j{{"suite", suite}, {"backend", backend}, {"properties", props}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    j["passed"] = passed();
    return j;
  }
};

using Rng = std::mt19937_64;

/// Calls f(i_0, ..., i_{k-1}) for every k-tuple of indices below n, or for
/// `cap` random tuples when there are more than that.
template <class F>
void for_each_tuple(std::size_t n, int k, std::size_t cap, Rng& rng, F&& f) {
  if (n == 0) return;
  std::size_t total = 1;
  bool over = false;
  for (int i = 0; i < k; ++i) {
    if (total > cap / n) over = true;
    total *= n;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  if (over) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < cap; ++s) {
      for (auto& i : idx) i = pick(rng);
      f(idx);
    }
    return;
  }
  while (true) {
    f(idx);
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == n - 1) idx[i++] = 0;
    if (i == idx.size()) return;
    ++idx[i];
  }
}

template <FiniteEffectAlgebra A>
Json element_json(const A& alg, const element_t<A>& a) {
  return io::element_to_json(alg, a);
}

/// A random observable on `grid` built from a random chain 0 ≤ c_1 ≤ ... ≤ 1
/// of carrier elements.
template <FiniteEffectAlgebra A>
SimpleObservable<A> random_grid_observable(const std::shared_ptr<const A>& alg, const std::vector<element_t<A>>& carrier,
                                           const std::vector<Rational>& grid, Rng& rng) {
  std::vector<element_t<A>> values{alg->zero()};
  std::vector<const element_t<A>*> above;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    above.clear();
    for (const auto& c : carrier)
      if (alg->leq(values.back(), c)) above.push_back(&c);
    values.push_back(*above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)]);
  }
  values.push_back(alg->one());
  return StepResolution<A>(alg, grid, std::move(values)).to_observable();
}

inline const std::vector<Rational>& oracle_grid() {
  static const std::vector<Rational> g{Rational(0), Rational(1, 2), Rational(1)};
  return g;
}

inline const std::vector<Rational>& involution_grid() {
  static const std::vector<Rational> g{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  return g;
}

// Effect algebra axioms and the induced order, by brute force over the carrier.

template <FiniteEffectAlgebra A>
Report axioms_suite(const std::shared_ptr<const A>& alg, const Options& opt) {
  Rng rng(opt.seed);
  Report r{"axioms", io::backend_to_json(*alg), {}};
  const auto carrier = alg->enumerate();
  const std::size_t n = carrier.size();
  auto el = [&](std::size_t i) { return element_json(*alg, carrier[i]); };
  auto opt_json = [&](const std::optional<element_t<A>>& a) { return a ? element_json(*alg, *a) : Json(nullptr); };

  auto& comm = r.add("sum_commutative");
  auto& zero = r.add("zero_neutral");
  auto& ortho = r.add("orthosupplement_unique");
  auto& absorb = r.add("one_absorbing");
  auto& match = r.add("order_matches_sum");
  auto& anti = r.add("complement_antitone");
  auto& antisym = r.add("order_antisymmetric");
  auto& glb = r.add("meet_is_glb");
  auto& lub = r.add("join_is_lub");
  auto& flag = r.add("lattice_flag");
  auto& assoc = r.add("sum_associative");
  auto& trans = r.add("order_transitive");

  bool all_bounds = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = carrier[i];
    zero.record(alg->add(a, alg->zero()) == std::optional(a), [&] { return Json{{"a", el(i)}}; });
    std::size_t supplements = 0;
    for (const auto& b : carrier)
      if (alg->add(a, b) == std::optional(alg->one())) ++supplements;
    ortho.record(supplements == 1 && alg->add(a, alg->complement(a)) == std::optional(alg->one()),
                 [&] { return Json{{"a", el(i)}, {"supplements", supplements}}; });
    absorb.record(!alg->add(a, alg->one()) || a == alg->zero(), [&] { return Json{{"a", el(i)}}; });
  }

  for_each_tuple(n, 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
    const auto& a = carrier[t[0]];
    const auto& b = carrier[t[1]];
    comm.record(alg->add(a, b) == alg->add(b, a), [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}}; });
    bool witnessed = false;
    for (const auto& c : carrier)
      if (alg->add(a, c) == std::optional(b)) witnessed = true;
    match.record(witnessed == alg->leq(a, b), [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}, {"leq", alg->leq(a, b)}}; });
    anti.record(!alg->leq(a, b) || alg->leq(alg->complement(b), alg->complement(a)),
                [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}}; });
    antisym.record(!(alg->leq(a, b) && alg->leq(b, a)) || a == b, [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}}; });

    std::optional<element_t<A>> lo, hi;
    for (const auto& c : carrier) {
      if (alg->leq(c, a) && alg->leq(c, b)) {
        bool greatest = true;
        for (const auto& d : carrier)
          if (alg->leq(d, a) && alg->leq(d, b) && !alg->leq(d, c)) greatest = false;
        if (greatest) lo = c;
      }
      if (alg->leq(a, c) && alg->leq(b, c)) {
        bool least = true;
        for (const auto& d : carrier)
          if (alg->leq(a, d) && alg->leq(b, d) && !alg->leq(c, d)) least = false;
        if (least) hi = c;
      }
    }
    const auto m = alg->meet(a, b);
    const auto j = alg->join(a, b);
    glb.record(m == lo, [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}, {"meet", opt_json(m)}, {"oracle", opt_json(lo)}}; });
    lub.record(j == hi, [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}, {"join", opt_json(j)}, {"oracle", opt_json(hi)}}; });
    if (!lo || !hi) all_bounds = false;
  });
  flag.record(alg->is_lattice() == all_bounds || (!alg->is_lattice() && n * n > opt.cap),
              [&] { return Json{{"is_lattice", alg->is_lattice()}, {"bounds_found", all_bounds}}; });

  for_each_tuple(n, 3, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
    const auto& a = carrier[t[0]];
    const auto& b = carrier[t[1]];
    const auto& c = carrier[t[2]];
    auto ab = alg->add(a, b);
    auto bc = alg->add(b, c);
    auto left = ab ? alg->add(*ab, c) : std::nullopt;
    auto right = bc ? alg->add(a, *bc) : std::nullopt;
    assoc.record(left == right, [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}, {"c", el(t[2])}}; });
    trans.record(!(alg->leq(a, b) && alg->leq(b, c)) || alg->leq(a, c),
                 [&] { return Json{{"a", el(t[0])}, {"b", el(t[1])}, {"c", el(t[2])}}; });
  });
  return r;
}

// The Olson order: question embedding and the partial order laws on grid observables.

template <FiniteEffectAlgebra A>
Report order_suite(const std::shared_ptr<const A>& alg, const Options& opt) {
  Rng rng(opt.seed);
  Report r{"order", io::backend_to_json(*alg), {}};
  const auto carrier = alg->enumerate();
  using Obs = SimpleObservable<A>;

  auto& embed = r.add("question_embedding");
  for_each_tuple(carrier.size(), 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
    const auto& a = carrier[t[0]];
    const auto& b = carrier[t[1]];
    embed.record(olson_leq(Obs::question(alg, a), Obs::question(alg, b)) == alg->leq(a, b), [&] {
      return Json{{"a", element_json(*alg, a)}, {"b", element_json(*alg, b)}, {"leq", alg->leq(a, b)}};
    });
  });

  const auto all = enumerate_grid_observables(alg, oracle_grid(), opt.cap);
  r.extra["enumerated"] = all.size();
  auto obs = [&](std::size_t i) { return io::observable_to_json(all[i]); };
  auto& refl = r.add("reflexive");
  auto& antisym = r.add("antisymmetric");
  auto& compare = r.add("compare_consistent");
  auto& trans = r.add("transitive");
  for (std::size_t i = 0; i < all.size(); ++i) refl.record(olson_leq(all[i], all[i]), [&] { return Json{{"x", obs(i)}}; });
  for_each_tuple(all.size(), 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
    const auto& x = all[t[0]];
    const auto& y = all[t[1]];
    const bool xy = olson_leq(x, y), yx = olson_leq(y, x);
    antisym.record(!(xy && yx) || x == y, [&] { return Json{{"x", obs(t[0])}, {"y", obs(t[1])}}; });
    const auto c = olson_compare(x, y);
    const bool consistent = (!c.witness_leq) == xy && (!c.witness_geq) == yx &&
                            (c.verdict == Verdict::Incomparable) == (!xy && !yx);
    compare.record(consistent, [&] { return Json{{"x", obs(t[0])}, {"y", obs(t[1])}, {"verdict", to_string(c.verdict)}}; });
  });
  for_each_tuple(all.size(), 3, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
    trans.record(!(olson_leq(all[t[0]], all[t[1]]) && olson_leq(all[t[1]], all[t[2]])) || olson_leq(all[t[0]], all[t[2]]),
                 [&] { return Json{{"x", obs(t[0])}, {"y", obs(t[1])}, {"z", obs(t[2])}}; });
  });
  return r;
}

// Meets and joins against greatest lower and least upper bounds found by
// enumerating every observable on a three-point grid.

template <FiniteEffectAlgebra A>
Report lattice_oracle_suite(const std::shared_ptr<const A>& alg, const Options& opt) {
  Rng rng(opt.seed);
  Report r{"lattice-oracle", io::backend_to_json(*alg), {}};
  const auto all = enumerate_grid_observables(alg, oracle_grid(), opt.cap);
  const std::size_t n = all.size();
  r.extra["grid"] = io::rationals_to_json(oracle_grid());
  r.extra["enumerated"] = n;

  std::vector<std::vector<char>> leq(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = olson_leq(all[i], all[j]);

  auto oracle = [&](std::size_t a, std::size_t b, bool upper) -> std::optional<std::size_t> {
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < n; ++k)
      if (upper ? (leq[a][k] && leq[b][k]) : (leq[k][a] && leq[k][b])) bounds.push_back(k);
    for (std::size_t g : bounds) {
      bool extreme = true;
      for (std::size_t k : bounds)
        if (!(upper ? leq[g][k] : leq[k][g])) {
          extreme = false;
          break;
        }
      if (extreme) return g;
    }
    return std::nullopt;
  };
  auto obs = [&](std::size_t i) { return io::observable_to_json(all[i]); };
  auto opt_obs = [&](const std::optional<std::size_t>& i) { return i ? obs(*i) : Json(nullptr); };

  auto& meet = r.add("meet_matches_oracle");
  auto& join = r.add("join_matches_oracle");
  auto& routes = r.add("routes_agree");
  for_each_tuple(n, 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
    const std::vector<SimpleObservable<A>> xs{all[t[0]], all[t[1]]};
    for (bool upper : {false, true}) {
      const auto expected = oracle(t[0], t[1], upper);
      const auto got = upper ? olson_join(xs, opt.cap) : olson_meet(xs, opt.cap);
      const bool ok = got.exists() == expected.has_value() && (!expected || *got.value == all[*expected]);
      (upper ? join : meet).record(ok, [&] {
        return Json{{"x", obs(t[0])}, {"y", obs(t[1])}, {"result", io::bound_to_json(got)}, {"oracle", opt_obs(expected)}};
      });
      if (auto fr = formula_routes(xs, upper))
        routes.record(fr->by_open == fr->by_closed, [&] {
          return Json{{"x", obs(t[0])}, {"y", obs(t[1])}, {"upper", upper}, {"open", io::observable_to_json(fr->by_open)},
                      {"closed", io::observable_to_json(fr->by_closed)}};
        });
    }
  });
  return r;
}

// Negation properties on seeded random pairs of observables with spectra in [0, 1].

template <FiniteEffectAlgebra A>
Report involution_suite_report(const std::shared_ptr<const A>& alg, const Options& opt, std::size_t pairs = 200) {
  if (!alg->is_lattice()) throw Error(ErrorCode::InvalidAlgebra, "the involution suite needs a lattice backend");
  Rng rng(opt.seed);
  Report r{"involution", io::backend_to_json(*alg), {}};
  const auto carrier = alg->enumerate();
  using Obs = SimpleObservable<A>;
  std::vector<std::pair<Obs, Obs>> inputs;
  for (std::size_t k = 0; k < pairs; ++k) {
    // every fourth pair is a pair of questions so the question items get exercised
    if (k % 4 == 3) {
      std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
      inputs.emplace_back(Obs::question(alg, carrier[pick(rng)]), Obs::question(alg, carrier[pick(rng)]));
    } else {
      auto x = random_grid_observable(alg, carrier, involution_grid(), rng);
      auto y = random_grid_observable(alg, carrier, involution_grid(), rng);
      inputs.emplace_back(std::move(x), std::move(y));
    }
  }
  for (const auto& [x, y] : inputs) {
    const auto rep = involution_suite(x, y);
    for (const auto& c : rep.checks) {
      auto it = std::find_if(r.properties.begin(), r.properties.end(), [&](const Property& p) { return p.name == c.name; });
      Property& p = it == r.properties.end() ? r.add(c.name, c.informational) : *it;
      if (!c.applicable) continue;
      p.record(c.passed, [&] { return Json{{"x", io::observable_to_json(x)}, {"y", io::observable_to_json(y)}}; });
    }
  }
  return r;
}

// Function, kernel and quotient representations.

inline std::vector<MeasurableFunction> grid_functions(int m, const std::vector<Rational>& values) {
  std::vector<MeasurableFunction> out;
  std::vector<std::size_t> k(static_cast<std::size_t>(m), 0);
  while (true) {
    MeasurableFunction f;
    for (auto i : k) f.values.push_back(values[i]);
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < k.size() && k[i] == values.size() - 1) k[i++] = 0;
    if (i == k.size()) return out;
    ++k[i];
  }
}

inline std::vector<MeasurableFunction> sample_functions(int m, const std::vector<Rational>& values, std::size_t cap, Rng& rng) {
  double total = 1;
  for (int i = 0; i < m; ++i) total *= static_cast<double>(values.size());
  if (total <= static_cast<double>(cap)) return grid_functions(m, values);
  std::vector<MeasurableFunction> out;
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (std::size_t s = 0; s < cap; ++s) {
    MeasurableFunction f;
    for (int w = 0; w < m; ++w) f.values.push_back(values[pick(rng)]);
    out.push_back(std::move(f));
  }
  return out;
}

template <FiniteEffectAlgebra A>
Report representation_suite(const std::shared_ptr<const A>& alg, const Options& opt) {
  Rng rng(opt.seed);
  Report r{"representation", io::backend_to_json(*alg), {}};
  const std::size_t fcap = std::min<std::size_t>(opt.cap, 512);
  auto fj = [](const MeasurableFunction& f) { return io::function_to_json(f); };

  if constexpr (std::is_same_v<A, SetAlgebra>) {
    const auto fs = sample_functions(alg->omega(), oracle_grid(), fcap, rng);
    std::vector<SimpleObservable<SetAlgebra>> xs;
    auto& round = r.add("function_round_trip");
    for (const auto& f : fs) {
      xs.push_back(observable_from_function(alg, f));
      round.record(function_from_observable(xs.back()) == f, [&] { return Json{{"f", fj(f)}}; });
    }
    auto& order = r.add("order_is_pointwise");
    auto& meet = r.add("meet_is_pointwise_min");
    auto& join = r.add("join_is_pointwise_max");
    for_each_tuple(fs.size(), 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
      const auto& f = fs[t[0]];
      const auto& g = fs[t[1]];
      auto w = [&] { return Json{{"f", fj(f)}, {"g", fj(g)}}; };
      order.record(olson_leq(xs[t[0]], xs[t[1]]) == function_order_oracle(f, g), w);
      meet.record(meet_of(xs[t[0]], xs[t[1]]) == observable_from_function(alg, pointwise_min(f, g)), w);
      join.record(join_of(xs[t[0]], xs[t[1]]) == observable_from_function(alg, pointwise_max(f, g)), w);
    });
  } else if constexpr (std::is_same_v<A, QuotientAlgebra>) {
    const auto fs = sample_functions(alg->omega(), oracle_grid(), fcap, rng);
    auto& order = r.add("quotient_criterion");
    auto& meet = r.add("meet_is_pointwise_min");
    auto& join = r.add("join_is_pointwise_max");
    for_each_tuple(fs.size(), 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
      const auto& f = fs[t[0]];
      const auto& g = fs[t[1]];
      auto w = [&] { return Json{{"f", fj(f)}, {"g", fj(g)}}; };
      const auto xf = pushforward(alg, f), xg = pushforward(alg, g);
      order.record(quotient_order_criterion(*alg, f, g) == olson_leq(xf, xg), w);
      meet.record(meet_of(xf, xg) == pushforward(alg, pointwise_min(f, g)), w);
      join.record(join_of(xf, xg) == pushforward(alg, pointwise_max(f, g)), w);
    });
  } else if constexpr (std::is_same_v<A, FiniteTribe>) {
    const auto all = enumerate_grid_observables(alg, oracle_grid(), opt.cap);
    r.extra["enumerated"] = all.size();
    std::vector<MarkovKernel> ks;
    auto& round = r.add("kernel_round_trip");
    for (const auto& x : all) {
      ks.push_back(kernel_from_observable(x));
      bool ok = true;
      try {
        ks.back().validate();
        ok = observable_from_kernel(alg, ks.back()) == x;
      } catch (const Error&) {
        ok = false;
      }
      round.record(ok, [&] { return Json{{"x", io::observable_to_json(x)}}; });
    }
    auto& order = r.add("kernel_order");
    for_each_tuple(all.size(), 2, opt.cap, rng, [&](const std::vector<std::size_t>& t) {
      order.record(kernel_leq(ks[t[0]], ks[t[1]]) == olson_leq(all[t[0]], all[t[1]]),
                   [&] { return Json{{"x", io::observable_to_json(all[t[0]])}, {"y", io::observable_to_json(all[t[1]])}}; });
    });
    auto& crisp = r.add("crisp_kernel_is_deterministic");
    std::vector<Rational> bits{Rational(0), Rational(1)};
    for (const auto& f : sample_functions(alg->omega(), bits, fcap, rng)) {
      // indicators outside an effect-tribe have no crisp observable
      bool in_tribe = true;
      for (const auto& [v, set] : level_sets(f)) {
        std::vector<Rational> ind;
        for (int w = 0; w < alg->omega(); ++w) ind.emplace_back((set >> w) & 1 ? 1 : 0);
        if (!alg->contains(ind)) in_tribe = false;
      }
      if (!in_tribe) continue;
      crisp.record(kernel_from_observable(crisp_observable(alg, f)) == deterministic_kernel(f), [&] { return Json{{"f", fj(f)}}; });
    }
  } else {
    (void)alg, (void)fj;
    throw Error(ErrorCode::InvalidAlgebra, "the representation suite needs a set_algebra, tribe or quotient backend");
  }
  return r;
}

// Hilbert-space effects.

inline Report hilbert_suite(const io::HilbertSpec& spec, const Options& opt, std::size_t pairs = 100) {
  using namespace hilbert;
  Rng rng(opt.seed);
  const auto& tol = opt.tol;
  const Eigen::Index d = spec.dim;
  Report r{"hilbert", io::backend_to_json(spec), {}};
  auto mj = [](const HermitianOperator& a) { return io::matrix_to_json(a.matrix()); };
  auto pair_json = [&](const HermitianOperator& a, const HermitianOperator& b) { return Json{{"a", mj(a)}, {"b", mj(b)}}; };

  auto& implies = r.add("spectral_implies_loewner");
  auto& proj = r.add("projection_orders_coincide");
  auto& recon = r.add("reconstruction");
  auto& laws = r.add("lattice_laws");
  auto& bounds = r.add("bounds_are_bounds");
  auto& diag = r.add("commuting_coordinatewise");
  auto& probe = r.add("probe_glb");

  const auto zero = HermitianOperator(Matrix::Zero(d, d), tol);
  const auto one = HermitianOperator(identity(d), tol);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto a = random_effect(d, rng, tol), c = random_effect(d, rng, tol);
    const auto b = spectral_join({a, c});
    for (const auto* y : {&b, &c})
      if (spectral_leq(a, *y)) implies.record(loewner_leq(a, *y), [&] { return pair_json(a, *y); });

    const auto p = random_projection(d, rng, tol);
    const auto q = k % 2 ? random_projection(d, rng, tol) : proj_join(p, random_projection(d, rng, tol));
    const bool s = spectral_leq(p, q);
    proj.record(s == loewner_leq(p, q) && s == range_contained(p, q), [&] { return pair_json(p, q); });

    for (const auto* x : {&a, &c})
      recon.record(reconstruction_residual(*x) <= 1e-9 * x->scale(), [&] { return Json{{"a", mj(*x)}}; });

    const auto m = spectral_meet_detailed({a, c});
    const auto j = spectral_join_detailed({a, c});
    auto near = [&](const HermitianOperator& x, const HermitianOperator& y) { return relative_distance(x, y) <= tol.lat; };
    const bool law_ok = near(spectral_meet({a, a}), a) && near(spectral_join({a, a}), a) && near(spectral_meet({c, a}), m.value) &&
                        near(spectral_join({c, a}), j.value) && near(spectral_meet({a, j.value}), a) &&
                        near(spectral_join({a, m.value}), a) && near(spectral_meet({a, zero}), zero) &&
                        near(spectral_join({a, zero}), a) && near(spectral_meet({a, one}), a) && near(spectral_join({a, one}), one);
    laws.record(law_ok, [&] { return pair_json(a, c); });
    bounds.record(m.max_residual <= tol.lat && j.max_residual <= tol.lat && m.value.is_effect() && j.value.is_effect() &&
                      spectral_leq(m.value, a) && spectral_leq(m.value, c) && spectral_leq(a, j.value) && spectral_leq(c, j.value),
                  [&] { return pair_json(a, c); });

    const auto da = random_diagonal_effect(d, rng, tol), db = random_diagonal_effect(d, rng, tol);
    std::vector<double> lo, hi;
    for (Eigen::Index i = 0; i < d; ++i) {
      lo.push_back(std::min(da.matrix()(i, i).real(), db.matrix()(i, i).real()));
      hi.push_back(std::max(da.matrix()(i, i).real(), db.matrix()(i, i).real()));
    }
    diag.record(relative_distance(spectral_meet({da, db}), HermitianOperator::diagonal(lo)) <= 1e-9 &&
                    relative_distance(spectral_join({da, db}), HermitianOperator::diagonal(hi)) <= 1e-9,
                [&] { return pair_json(da, db); });

    for (int s = 0; s < 10; ++s) {
      const HermitianOperator z = s % 2 ? spectral_meet({a, c, random_effect(d, rng, tol)})
                                        : HermitianOperator(identity(d) * (std::min(a.eigenvalues()[0], c.eigenvalues()[0]) * u(rng)), tol);
      if (!spectral_leq(z, a) || !spectral_leq(z, c)) continue;
      probe.record(spectral_leq(z, m.value), [&] { return Json{{"a", mj(a)}, {"b", mj(c)}, {"probe", mj(z)}}; });
    }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "order", "lattice-oracle", "involution", "representation", "hilbert"};
  return names;
}

/// Runs `suite` on a backend. Throws ParseError for unknown suites and
/// InvalidAlgebra when the suite does not apply to the backend.
inline Report run_suite(const io::AnyAlgebra& backend, const std::string& suite, const Options& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
  return std::visit(
      [&](const auto& b) -> Report {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, io::HilbertSpec>) {
          if (suite != "hilbert") throw Error(ErrorCode::InvalidAlgebra, "the hilbert backend only supports the hilbert suite");
          return hilbert_suite(b, opt);
        } else {
          if (suite == "axioms") return axioms_suite(b, opt);
          if (suite == "order") return order_suite(b, opt);
          if (suite == "lattice-oracle") return lattice_oracle_suite(b, opt);
          if (suite == "involution") return involution_suite_report(b, opt);
          if (suite == "representation") return representation_suite(b, opt);
          throw Error(ErrorCode::InvalidAlgebra, "the hilbert suite needs a hilbert backend");
        }
      },
      backend);
}

}  // namespace olson::check

#endif  // OLSON_CHECK_SUITES_HPP
