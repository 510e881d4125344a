#ifndef FFLA_CLI_JSON_HPP
#define FFLA_CLI_JSON_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ffla/blackbox/report.hpp"
#include "ffla/field/polynomial.hpp"
#include "ffla/matrix/dense_matrix.hpp"
#include "ffla/mm/config.hpp"
#include "ffla/sparse/elimination.hpp"

namespace ffla::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const DenseMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(a(i, j));
    rows.push_back(std::move(r));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

inline Json to_json(std::span<const Element> v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

/// Coefficients low to high.
inline Json to_json(const Polynomial& p) {
  return Json{{"degree", p.degree()}, {"coefficients", to_json(std::span<const Element>(p.coeffs()))},
              {"text", p.to_string()}};
}

inline Json to_json(const ProbabilityReport& r) {
  Json j{{"algorithm", r.algorithm},
         {"bound_formula", r.bound_formula},
         {"bound", r.bound.str()},
         {"bound_value", r.bound_value()},
         {"sample_set_size", r.sample_set_size},
         {"trials", r.trials},
         {"successes", r.successes}};
  if (r.warning) j["warning"] = *r.warning;
  return j;
}

inline Json to_json(const OpCounter& c) {
  return Json{{"field_mul", c.field_mul},
              {"field_add", c.field_add},
              {"field_ops", c.field_ops()},
              {"base_products", c.base_products},
              {"base_multiplications", c.base_multiplications},
              {"reductions", c.reductions},
              {"max_abs_intermediate", c.max_abs_intermediate}};
}

inline Json to_json(const FillStats& s) {
  return Json{{"fill_in", s.fill_in},
              {"created", s.created},
              {"cancellations", s.cancellations},
              {"steps", s.steps},
              {"max_active_nnz", s.max_active_nnz}};
}

/// What a command produced, before it is rendered as text or JSON.
struct Outcome {
  std::string algorithm;
  Json result;
  std::string text;
  std::optional<Json> probability_report;
  std::optional<Json> op_counts;
  int exit_code = 0;
};

}  // namespace ffla::cli

#endif  // FFLA_CLI_JSON_HPP
