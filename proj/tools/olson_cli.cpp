#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "olson/check/suites.hpp"
#include "olson/io/codec.hpp"

namespace {

using namespace olson;
using io::Json;

namespace exit_code {
constexpr int ok = 0;
constexpr int input = 1;
constexpr int mismatch = 2;
constexpr int incomparable = 3;
constexpr int tolerance = 4;
constexpr int suite_failure = 5;
}  // namespace exit_code

int exit_code_for(ErrorCode code, bool spectral) {
  switch (code) {
    case ErrorCode::ElementNotInCarrier:
    case ErrorCode::SetOutOfRange:
    case ErrorCode::ElementForeignToAlgebra:
    case ErrorCode::BackendMismatch:
    case ErrorCode::DomainMismatch:
    case ErrorCode::KernelValueOutsideTribe:
      return exit_code::mismatch;
    case ErrorCode::NotHermitian:
    case ErrorCode::NotAnEffect:
    case ErrorCode::NotAProjection:
    case ErrorCode::EigendecompositionFailure:
      return exit_code::tolerance;
    case ErrorCode::DimensionMismatch:
      return spectral ? exit_code::tolerance : exit_code::input;
    default:
      return exit_code::input;
  }
}

struct Settings {
  std::uint64_t seed = 0;
  std::size_t cap = default_enumeration_cap;
  std::vector<std::string> tol;
  std::string out;
};

struct Result {
  Json body;
  int code = exit_code::ok;
};

hilbert::Tolerances tolerances(const Settings& s) {
  hilbert::Tolerances t;
  for (const auto& item : s.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "--tol expects name=value, got '" + item + "'");
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "--tol value in '" + item + "' is not a number");
    }
    t.set(item.substr(0, eq), v);
  }
  return t;
}

void require_no_tol(const Settings& s) {
  if (!s.tol.empty()) throw Error(ErrorCode::ParseError, "--tol only applies to Hilbert-space commands");
}

template <class F>
Result with_finite_backend(const std::string& backend_path, F&& f) {
  const auto backend = io::backend_from_json(io::read_file(backend_path));
  return std::visit(
      [&](const auto& alg) -> Result {
        using B = std::decay_t<decltype(alg)>;
        if constexpr (std::is_same_v<B, io::HilbertSpec>) {
          throw Error(ErrorCode::ParseError, "hilbert backends take matrices; use the spectral subcommand");
        } else {
          return f(alg);
        }
      },
      backend);
}

template <class A>
std::vector<SimpleObservable<A>> read_observables(const std::shared_ptr<const A>& alg, const std::vector<std::string>& paths) {
  std::vector<SimpleObservable<A>> xs;
  for (const auto& p : paths) xs.push_back(io::observable_from_json(alg, io::read_file(p)));
  return xs;
}

Result cmd_cmp(const std::string& backend, const std::string& x, const std::string& y) {
  return with_finite_backend(backend, [&](const auto& alg) {
    const auto xs = read_observables(alg, {x, y});
    const auto c = olson_compare(xs[0], xs[1]);
    return Result{io::comparison_to_json(c), c.verdict == Verdict::Incomparable ? exit_code::incomparable : exit_code::ok};
  });
}

Result cmd_bound(const std::string& backend, const std::vector<std::string>& files, bool upper, std::size_t cap) {
  return with_finite_backend(backend, [&](const auto& alg) {
    const auto xs = read_observables(alg, files);
    return Result{io::bound_to_json(upper ? olson_join(xs, cap) : olson_meet(xs, cap))};
  });
}

Result cmd_neg(const std::string& backend, const std::string& x) {
  return with_finite_backend(backend, [&](const auto& alg) {
    const auto xs = read_observables(alg, {x});
    return Result{io::observable_to_json(xs[0].negate())};
  });
}

hilbert::HermitianOperator read_operator(const std::string& path, const hilbert::Tolerances& tol) {
  return hilbert::HermitianOperator(io::matrix_from_json(io::read_file(path)), tol);
}

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Result cmd_spectral(const std::string& op, const std::vector<std::string>& files, const hilbert::Tolerances& tol) {
  using namespace hilbert;
  std::vector<HermitianOperator> as;
  for (const auto& f : files) as.push_back(read_operator(f, tol));
  auto arity = [&](std::size_t n) {
    if (as.size() != n) throw Error(ErrorCode::ParseError, "spectral " + op + " takes " + std::to_string(n) + " matrix file(s)");
  };
  if (op == "cmp") {
    arity(2);
    require_same_dim(as[0], as[1]);
    const auto leq = spectral_violation(as[0], as[1]);
    const auto geq = spectral_violation(as[1], as[0]);
    Verdict v = Verdict::Incomparable;
    if (!leq && !geq)
      v = Verdict::Equal;
    else if (!leq)
      v = Verdict::LessOrEqual;
    else if (!geq)
      v = Verdict::GreaterOrEqual;
    Json j{{"verdict", to_string(v)}};
    if (v == Verdict::Incomparable) j["witness_t"] = *leq;
    j["loewner"] = loewner_leq(as[0], as[1]);
    j["logical"] = as[0].is_effect() && as[1].is_effect() ? Json(logical_leq(as[0], as[1])) : Json(nullptr);
    return {j, v == Verdict::Incomparable ? exit_code::incomparable : exit_code::ok};
  }
  if (op == "meet" || op == "join") {
    if (as.empty()) throw Error(ErrorCode::EmptyFamily, "spectral " + op + " needs at least one matrix");
    const auto b = op == "meet" ? spectral_meet_detailed(as) : spectral_join_detailed(as);
    return {Json{{"operator", io::matrix_to_json(b.value.matrix())}, {"grid", doubles(b.grid)}, {"max_residual", b.max_residual}}};
  }
  if (op == "measure") {
    arity(1);
    const auto m = spectral_measure(as[0]);
    Json cumulative = Json::array();
    for (const auto& p : m.cumulative) cumulative.push_back(io::matrix_to_json(p));
    return {Json{{"grid", doubles(m.grid)}, {"cumulative", cumulative}, {"residual", reconstruction_residual(as[0])}}};
  }
  throw Error(ErrorCode::ParseError, "unknown spectral operation '" + op + "'");
}

Result cmd_check(const std::string& backend_path, const std::string& suite, const Settings& s) {
  const auto backend = io::backend_from_json(io::read_file(backend_path));
  if (!std::holds_alternative<io::HilbertSpec>(backend)) require_no_tol(s);
  check::Options opt{s.seed, s.cap, tolerances(s)};
  const auto report = check::run_suite(backend, suite, opt);
  return {report.to_json(), report.passed() ? exit_code::ok : exit_code::suite_failure};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Olson order, meets and joins of observables on effect-algebra backends"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--seed", s.seed, "Seed for randomized suites");
  app.add_option("--cap", s.cap, "Enumeration and sampling cap")->check(CLI::PositiveNumber);
  app.add_option("--tol", s.tol, "Hilbert tolerance override name=value (herm, proj, eig, psd, ord, rec, lat, log)");
  app.add_option("--out", s.out, "Write the JSON result to this path instead of standard output");

  std::string backend, x, y, op, suite;
  std::vector<std::string> files;

  auto* cmp = app.add_subcommand("cmp", "Compare two observables in the Olson order");
  cmp->add_option("backend", backend, "Backend JSON file")->required();
  cmp->add_option("x", x, "Observable JSON file")->required();
  cmp->add_option("y", y, "Observable JSON file")->required();

  auto* meet = app.add_subcommand("meet", "Olson meet of observables");
  meet->add_option("backend", backend, "Backend JSON file")->required();
  meet->add_option("observables", files, "Observable JSON files")->required();

  auto* join = app.add_subcommand("join", "Olson join of observables");
  join->add_option("backend", backend, "Backend JSON file")->required();
  join->add_option("observables", files, "Observable JSON files")->required();

  auto* neg = app.add_subcommand("neg", "Negation x(1 - E) of an observable");
  neg->add_option("backend", backend, "Backend JSON file")->required();
  neg->add_option("x", x, "Observable JSON file")->required();

  auto* spectral = app.add_subcommand("spectral", "Spectral order computations on Hermitian matrices");
  spectral->add_option("op", op, "cmp, meet, join or measure")->required()->check(CLI::IsMember({"cmp", "meet", "join", "measure"}));
  spectral->add_option("matrices", files, "Matrix JSON files")->required();

  auto* check = app.add_subcommand("check", "Run a property suite on a backend");
  check->add_option("backend", backend, "Backend JSON file")->required();
  check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(check::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::input;
  }

  const bool is_spectral = spectral->parsed();
  Result result;
  try {
    if (cmp->parsed()) {
      require_no_tol(s);
      result = cmd_cmp(backend, x, y);
    } else if (meet->parsed() || join->parsed()) {
      require_no_tol(s);
      result = cmd_bound(backend, files, join->parsed(), s.cap);
    } else if (neg->parsed()) {
      require_no_tol(s);
      result = cmd_neg(backend, x);
    } else if (is_spectral) {
      result = cmd_spectral(op, files, tolerances(s));
    } else {
      result = cmd_check(backend, suite, s);
    }
  } catch (const Error& e) {
    std::cerr << io::dump(Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    return exit_code_for(e.code(), is_spectral);
  }

  const std::string text = io::dump(result.body);
  if (s.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(s.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << s.out << "\n";
      return exit_code::input;
    }
    f << text;
  }
  return result.code;
}
