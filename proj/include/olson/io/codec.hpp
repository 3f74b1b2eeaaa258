#ifndef OLSON_IO_CODEC_HPP
#define OLSON_IO_CODEC_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "olson/effect.hpp"
#include "olson/hilbert.hpp"
#include "olson/kernel.hpp"
#include "olson/lattice.hpp"
#include "olson/observable.hpp"

namespace olson::io {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    parse_error(std::string("field '") + what + "' has the wrong type");
  }
}

// Rationals travel as "k/n" strings; plain JSON integers are accepted on input.

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::RationalOverflow) throw;
      parse_error("bad rational '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  parse_error("rational must be a \"k/n\" string");
}

inline Json rational_to_json(const Rational& r) { return r.str(); }

inline std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

inline Json rationals_to_json(const std::vector<Rational>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(rational_to_json(r));
  return a;
}

inline SetBits set_from_json(const Json& j) {
  if (!j.is_array()) parse_error("set literal must be an array of point indices");
  SetBits s = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_error("set members must be integers");
    auto i = v.get<std::int64_t>();
    if (i < 0 || i >= 64) throw Error(ErrorCode::SetOutOfRange, "point " + std::to_string(i) + " is not inside omega");
    s |= SetBits{1} << i;
  }
  return s;
}

inline Json set_to_json(SetBits s) {
  Json a = Json::array();
  for (int i : set_members(s)) a.push_back(i);
  return a;
}

// Backends.

struct HilbertSpec {
  int dim = 2;
};

using AnyAlgebra = std::variant<std::shared_ptr<const MvChain>, std::shared_ptr<const SetAlgebra>, std::shared_ptr<const TableAlgebra>,
                                std::shared_ptr<const FiniteTribe>, std::shared_ptr<const QuotientAlgebra>, HilbertSpec>;

inline int small_int(const Json& j, const char* what, int lo, int hi) {
  auto v = get_as<std::int64_t>(j, what);
  if (v < lo || v > hi) parse_error(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

/// `{"kind": "mv_chain" | "set_algebra" | "table" | "tribe" | "quotient" | "hilbert", ...}`.
inline AnyAlgebra backend_from_json(const Json& j) {
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "mv_chain") return std::make_shared<const MvChain>(small_int(field(j, "n"), "n", 1, 1 << 20));
  if (kind == "set_algebra") return std::make_shared<const SetAlgebra>(small_int(field(j, "omega"), "omega", 1, 63));
  if (kind == "quotient")
    return std::make_shared<const QuotientAlgebra>(small_int(field(j, "omega"), "omega", 1, 63), set_from_json(field(j, "null")));
  if (kind == "tribe") {
    std::vector<FiniteTribe::Constraint> constraints;
    if (j.contains("constraints")) constraints = get_as<std::vector<FiniteTribe::Constraint>>(j.at("constraints"), "constraints");
    return std::make_shared<const FiniteTribe>(small_int(field(j, "omega"), "omega", 1, 20), small_int(field(j, "den"), "den", 1, 1 << 16),
                                               std::move(constraints));
  }
  if (kind == "table") {
    const auto& add = field(j, "add");
    if (!add.is_array()) parse_error("table 'add' must be an array of rows");
    TableAlgebra::SumTable t;
    for (const auto& row : add) {
      if (!row.is_array()) parse_error("table rows must be arrays");
      std::vector<std::optional<std::uint32_t>> r;
      for (const auto& v : row) {
        if (v.is_null())
          r.emplace_back();
        else
          r.emplace_back(static_cast<std::uint32_t>(small_int(v, "table entry", 0, 1 << 20)));
      }
      t.push_back(std::move(r));
    }
    auto zero = static_cast<std::uint32_t>(small_int(field(j, "zero"), "zero", 0, 1 << 20));
    auto one = static_cast<std::uint32_t>(small_int(field(j, "one"), "one", 0, 1 << 20));
    return std::make_shared<const TableAlgebra>(std::move(t), zero, one);
  }
  if (kind == "hilbert") return HilbertSpec{small_int(field(j, "dim"), "dim", 1, 16)};
  parse_error("unknown backend kind '" + kind + "'");
}

inline Json backend_to_json(const MvChain& a) { return Json{{"kind", "mv_chain"}, {"n", a.denominator()}}; }
inline Json backend_to_json(const SetAlgebra& a) { return Json{{"kind", "set_algebra"}, {"omega", a.omega()}}; }
inline Json backend_to_json(const QuotientAlgebra& a) {
  return Json{{"kind", "quotient"}, {"omega", a.omega()}, {"null", set_to_json(a.null_set())}};
}
inline Json backend_to_json(const FiniteTribe& a) {
  Json j{{"kind", "tribe"}, {"omega", a.omega()}, {"den", a.denominator()}};
  if (!a.constraints().empty()) j["constraints"] = a.constraints();
  return j;
}
inline Json backend_to_json(const TableAlgebra& a) {
  Json rows = Json::array();
  for (const auto& row : a.table()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v ? Json(*v) : Json(nullptr));
    rows.push_back(r);
  }
  return Json{{"kind", "table"}, {"add", rows}, {"zero", a.zero().value}, {"one", a.one().value}};
}
inline Json backend_to_json(const HilbertSpec& h) { return Json{{"kind", "hilbert"}, {"dim", h.dim}}; }

// Elements, one syntax per backend.

inline MvChain::element_type element_from_json(const MvChain& a, const Json& j) { return a.element(rational_from_json(j)); }
inline Json element_to_json(const MvChain& a, const MvChain::element_type& e) { return rational_to_json(a.value(e)); }

inline SetAlgebra::element_type element_from_json(const SetAlgebra& a, const Json& j) { return a.element(set_from_json(j)); }
inline Json element_to_json(const SetAlgebra&, const SetAlgebra::element_type& e) { return set_to_json(e.value); }

/// Any representative of the class is accepted; output is canonical.
inline QuotientAlgebra::element_type element_from_json(const QuotientAlgebra& a, const Json& j) {
  return a.quotient_map(set_from_json(j));
}
inline Json element_to_json(const QuotientAlgebra&, const QuotientAlgebra::element_type& e) { return set_to_json(e.value); }

inline TableAlgebra::element_type element_from_json(const TableAlgebra& a, const Json& j) {
  if (!j.is_number_integer()) parse_error("table element must be an integer index");
  auto v = j.get<std::int64_t>();
  if (v < 0) throw Error(ErrorCode::ElementNotInCarrier, "negative table index");
  return a.element(static_cast<std::uint32_t>(v));
}
inline Json element_to_json(const TableAlgebra&, const TableAlgebra::element_type& e) { return e.value; }

inline FiniteTribe::element_type element_from_json(const FiniteTribe& a, const Json& j) { return a.element(rationals_from_json(j)); }
inline Json element_to_json(const FiniteTribe& a, const FiniteTribe::element_type& e) {
  std::vector<Rational> vs;
  for (int w = 0; w < a.omega(); ++w) vs.push_back(a.value(e, w));
  return rationals_to_json(vs);
}

// Functions and kernels.

inline MeasurableFunction function_from_json(const Json& j) { return {rationals_from_json(field(j, "values"))}; }
inline Json function_to_json(const MeasurableFunction& f) { return Json{{"values", rationals_to_json(f.values)}}; }

inline MarkovKernel kernel_from_json(const Json& j) {
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) parse_error("kernel 'rows' must be an array");
  MarkovKernel k;
  for (const auto& r : rows) k.rows.push_back({rationals_from_json(field(r, "support")), rationals_from_json(field(r, "mass"))});
  return k;
}

inline Json kernel_to_json(const MarkovKernel& k) {
  Json rows = Json::array();
  for (const auto& r : k.rows) rows.push_back(Json{{"support", rationals_to_json(r.support)}, {"mass", rationals_to_json(r.mass)}});
  return Json{{"rows", rows}};
}

// Observables.

/// `{"points": [...], "weights": [...]}`. Set algebras and quotients also
/// accept `{"function": {"values": [...]}}`, tribes `{"kernel": {"rows": [...]}}`.
template <EffectAlgebra A>
SimpleObservable<A> observable_from_json(const std::shared_ptr<const A>& alg, const Json& j) {
  if constexpr (std::is_same_v<A, SetAlgebra>) {
    if (j.is_object() && j.contains("function")) return observable_from_function(alg, function_from_json(j.at("function")));
  }
  if constexpr (std::is_same_v<A, QuotientAlgebra>) {
    if (j.is_object() && j.contains("function")) return pushforward(alg, function_from_json(j.at("function")));
  }
  if constexpr (std::is_same_v<A, FiniteTribe>) {
    if (j.is_object() && j.contains("kernel")) return observable_from_kernel(alg, kernel_from_json(j.at("kernel")));
  }
  auto points = rationals_from_json(field(j, "points"));
  const auto& ws = field(j, "weights");
  if (!ws.is_array()) parse_error("'weights' must be an array");
  std::vector<element_t<A>> weights;
  for (const auto& w : ws) weights.push_back(element_from_json(*alg, w));
  return SimpleObservable<A>::from_weights(alg, std::move(points), std::move(weights));
}

template <EffectAlgebra A>
Json observable_to_json(const SimpleObservable<A>& x) {
  Json ws = Json::array();
  for (const auto& w : x.weights()) ws.push_back(element_to_json(x.algebra(), w));
  return Json{{"points", rationals_to_json(x.points())}, {"weights", ws}};
}

/// Rows `{"t", "open", "closed"}` at every spectrum point.
template <EffectAlgebra A>
Json resolution_dump(const SimpleObservable<A>& x) {
  Json rows = Json::array();
  for (const auto& t : x.points())
    rows.push_back(Json{{"t", rational_to_json(t)},
                        {"open", element_to_json(x.algebra(), x.resolution_open(t))},
                        {"closed", element_to_json(x.algebra(), x.resolution_closed(t))}});
  return rows;
}

inline Json comparison_to_json(const OlsonComparison& c) {
  Json j{{"verdict", to_string(c.verdict)}};
  if (c.verdict == Verdict::Incomparable) j["witness_t"] = rational_to_json(*c.witness_leq);
  return j;
}

template <EffectAlgebra A>
Json bound_to_json(const BoundResult<A>& r) {
  if (r.exists()) return observable_to_json(*r.value);
  return Json{{"exists", false}, {"certified", to_string(r.certified)}};
}

// Matrices.

inline hilbert::Matrix matrix_from_json(const Json& j) {
  const int d = small_int(field(j, "dim"), "dim", 1, 16);
  auto read = [&](const char* key, bool required) {
    hilbert::RealVector flat = hilbert::RealVector::Zero(d * d);
    if (!j.contains(key)) {
      if (required) parse_error(std::string("missing field '") + key + "'");
      return flat;
    }
    const auto& rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) parse_error(std::string("'") + key + "' must have dim rows");
    for (int r = 0; r < d; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != d) parse_error(std::string("'") + key + "' rows must have dim entries");
      for (int c = 0; c < d; ++c) {
        const auto& v = row[static_cast<std::size_t>(c)];
        if (v.is_number())
          flat[r * d + c] = v.get<double>();
        else if (v.is_string())
          flat[r * d + c] = rational_from_json(v).to_double();
        else
          parse_error("matrix entries must be numbers");
      }
    }
    return flat;
  };
  const auto re = read("re", true);
  const auto im = read("im", false);
  hilbert::Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = hilbert::Complex(re[r * d + c], im[r * d + c]);
  return m;
}

/// "im" is omitted for real matrices.
inline Json matrix_to_json(const hilbert::Matrix& m) {
  Json re = Json::array(), im = Json::array();
  bool real = true;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
      if (m(r, c).imag() != 0.0) real = false;
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  Json j{{"dim", m.rows()}, {"re", re}};
  if (!real) j["im"] = im;
  return j;
}

namespace detail {

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline void write(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_number_float()) {
    out += format_double(j.get<double>());
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); })) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ", ";
        write(out, j[i], depth + 1);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(out, j[i], depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write(out, it.value(), depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Pretty-printed JSON with floats at 17 significant digits.
inline std::string dump(const Json& j) {
  std::string out;
  detail::write(out, j, 0);
  return out + "\n";
}

}  // namespace olson::io

#endif  // OLSON_IO_CODEC_HPP
