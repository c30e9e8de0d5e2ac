#ifndef BCNUM_JSON_IO_HPP
#define BCNUM_JSON_IO_HPP

#include <json.hpp>

#include "bcnum/analytic.hpp"
#include "bcnum/biquaternion.hpp"
#include "bcnum/matrix.hpp"
#include "bcnum/schur.hpp"
#include "bcnum/space.hpp"

namespace bcn::io {

using json = nlohmann::ordered_json;

class parse_error : public error {
public:
  explicit parse_error(const std::string& what) : error("ParseError", what) {}
};

inline json dump_complex(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

inline std::complex<double> parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

/// Cartesian form {"z1":[re,im],"z2":[re,im]}.
inline json dump_bicomplex(const bicomplexd& z) {
  return json{{"z1", dump_complex(z.z1)}, {"z2", dump_complex(z.z2)}};
}

/// Idempotent form {"b1":[re,im],"b2":[re,im]}.
inline json dump_bicomplex_idempotent(const bicomplexd& z) {
  const auto p = to_idempotent(z);
  return json{{"b1", dump_complex(p.b1)}, {"b2", dump_complex(p.b2)}};
}

/// Accepts either the cartesian or the idempotent value form.
inline bicomplexd parse_bicomplex(const json& j) {
  if (!j.is_object()) throw parse_error("expected a bicomplex object");
  if (j.contains("z1") || j.contains("z2")) {
    const auto z1 = j.contains("z1") ? parse_complex(j.at("z1"))
                                     : std::complex<double>();
    const auto z2 = j.contains("z2") ? parse_complex(j.at("z2"))
                                     : std::complex<double>();
    return bicomplexd(z1, z2);
  }
  if (j.contains("b1") || j.contains("b2")) {
    const auto b1 = j.contains("b1") ? parse_complex(j.at("b1"))
                                     : std::complex<double>();
    const auto b2 = j.contains("b2") ? parse_complex(j.at("b2"))
                                     : std::complex<double>();
    return from_idempotent(b1, b2);
  }
  throw parse_error("bicomplex object needs z1/z2 or b1/b2");
}

inline json dump_hyperbolic(const hyperbolicd& h) {
  return json{{"a", h.a}, {"b", h.b}};
}

inline hyperbolicd parse_hyperbolic(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw parse_error("expected {\"a\":..., \"b\":...}");
  return hyperbolicd(j.at("a").get<double>(), j.at("b").get<double>());
}

inline json dump_biquaternion(const biquaterniond& q) {
  return json{{"q1", dump_bicomplex(q.q1)}, {"q2", dump_bicomplex(q.q2)}};
}

inline biquaterniond parse_biquaternion(const json& j) {
  if (!j.is_object() || !j.contains("q1") || !j.contains("q2"))
    throw parse_error("expected {\"q1\":..., \"q2\":...}");
  return {parse_bicomplex(j.at("q1")), parse_bicomplex(j.at("q2"))};
}

inline json dump_matrix(const BCMatrixd& a) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      entries.push_back(dump_bicomplex(a(r, c)));
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

inline BCMatrixd parse_matrix(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw parse_error("expected {\"rows\",\"cols\",\"entries\"}");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (rows < 0 || cols < 0 ||
      !entries.is_array() ||
      entries.size() != static_cast<size_t>(rows * cols))
    throw parse_error("matrix entries do not match rows*cols");
  BCMatrixd a(rows, cols);
  size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      a.set(r, c, parse_bicomplex(entries[k++]));
  return a;
}

inline json dump_vector(const BCVectord& v) {
  json entries = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    entries.push_back(dump_bicomplex(v(k)));
  return json{{"entries", entries}};
}

inline BCVectord parse_vector(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    throw parse_error("expected {\"entries\": [...]}");
  std::vector<bicomplexd> entries;
  for (const auto& e : j.at("entries")) entries.push_back(parse_bicomplex(e));
  return BCVectord(entries);
}

inline json dump_coefficient_function(const CoefficientFunctiond& f) {
  json coeffs = json::array();
  for (size_t n = 0; n < f.truncation(); ++n)
    coeffs.push_back(dump_bicomplex(f.coeff(n)));
  return json{{"N", f.truncation()}, {"coeffs", coeffs}};
}

inline CoefficientFunctiond parse_coefficient_function(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw parse_error("expected {\"N\":..., \"coeffs\": [...]}");
  std::vector<bicomplexd> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_bicomplex(c));
  if (j.contains("N")) {
    const auto n = j.at("N").get<size_t>();
    while (coeffs.size() < n) coeffs.emplace_back();
  }
  return CoefficientFunctiond(coeffs);
}

/// Schur functions: Blaschke parameter form
/// {"blaschke_zeros_1": [...], "blaschke_zeros_2": [...],
///  "unimodular_1": [re,im], "unimodular_2": [re,im]}
/// or coefficient form {"coeffs": [<bicomplex>...]}.
inline SchurFunctiond parse_schur_function(const json& j) {
  if (!j.is_object()) throw parse_error("expected a Schur function object");
  if (j.contains("coeffs")) {
    const auto f = parse_coefficient_function(j);
    return {SchurComponent<double>::series(f.component1()),
            SchurComponent<double>::series(f.component2())};
  }
  if (!j.contains("blaschke_zeros_1") || !j.contains("blaschke_zeros_2"))
    throw parse_error("Schur function needs blaschke_zeros_1/2 or coeffs");
  auto zeros = [](const json& arr) {
    std::vector<std::complex<double>> out;
    for (const auto& z : arr) out.push_back(parse_complex(z));
    return out;
  };
  const std::complex<double> c1 = j.contains("unimodular_1")
                                      ? parse_complex(j.at("unimodular_1"))
                                      : std::complex<double>(1);
  const std::complex<double> c2 = j.contains("unimodular_2")
                                      ? parse_complex(j.at("unimodular_2"))
                                      : std::complex<double>(1);
  return {SchurComponent<double>::blaschke(zeros(j.at("blaschke_zeros_1")), c1),
          SchurComponent<double>::blaschke(zeros(j.at("blaschke_zeros_2")),
                                           c2)};
}

inline json dump_realization(const RealizationMatrixd& r) {
  return json{{"A", dump_matrix(r.a)},
              {"B", dump_matrix(r.b)},
              {"C", dump_matrix(r.c)},
              {"D", dump_matrix(r.d)}};
}

inline RealizationMatrixd parse_realization(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B") ||
      !j.contains("C") || !j.contains("D"))
    throw parse_error("expected {\"A\",\"B\",\"C\",\"D\"}");
  return {parse_matrix(j.at("A")), parse_matrix(j.at("B")),
          parse_matrix(j.at("C")), parse_matrix(j.at("D"))};
}

} // namespace bcn::io

#endif // BCNUM_JSON_IO_HPP
