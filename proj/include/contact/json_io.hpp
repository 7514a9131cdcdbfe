#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "contact/algebra.hpp"
#include "contact/checks.hpp"
#include "contact/group.hpp"
#include "contact/homology.hpp"

namespace contact::json_io {

// Insertion-ordered JSON keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

/// "num/den", always with an explicit denominator.
inline std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "num/den" for real entries, "num/den+num/deni" otherwise; both forms are
/// accepted by parse_gaussian after stripping the redundant "/1".
inline std::string entry_str(const Gaussian& z) {
  if (z.im == 0) return rational_str(z.re);
  std::string im = rational_str(z.im) + "i";
  return rational_str(z.re) + (z.im > 0 ? "+" : "") + im;
}

inline Json matrix_json(const GMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json coeffs_json(const std::vector<Rational>& c) {
  Json out = Json::array();
  for (const auto& x : c) out.push_back(rational_str(x));
  return out;
}

inline Json verification_json(const AlgebraSpec& spec, const VerificationReport& rep) {
  Json j;
  j["algebra"] = spec.to_string();
  j["axioms"] = {
      {"g_minus2_one_dimensional", rep.g_minus2_one_dimensional},
      {"degree_dims_balanced", rep.degree_dims_balanced},
      {"grading_element_acts", rep.grading_element_acts},
      {"brackets_graded", rep.brackets_graded},
      {"levi_bracket_nondegenerate", rep.levi_bracket_nondegenerate},
      {"g2_bracket_spans_grading_element", rep.g2_bracket_spans_grading_element},
      {"jacobi_identity", rep.jacobi_identity},
      {"trace_pairing_graded", rep.trace_pairing_graded},
  };
  j["all_ok"] = rep.all_ok();
  j["failed_check"] = rep.failed_check;
  j["counterexample"] = rep.counterexample;
  return j;
}

inline Json basis_json(const GradedContactAlgebra& alg) {
  Json out = Json::array();
  for (int b = 0; b < alg.dim(); ++b) {
    Json item;
    item["index"] = b;
    item["degree"] = alg.degree(b);
    if (alg.side(b)) item["side"] = std::string(1, alg.side(b));
    item["matrix"] = matrix_json(alg.basis_matrix(b));
    out.push_back(std::move(item));
  }
  return out;
}

inline Json harmonic_json(const AlgebraSpec& spec, const HarmonicReport& rep) {
  Json j;
  j["algebra"] = spec.to_string();
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json item;
    item["homogeneity"] = e.homogeneity;
    item["type"] = {e.type[0], e.type[1], e.type[2]};
    item["dim"] = e.dim;
    entries.push_back(std::move(item));
  }
  j["components"] = std::move(entries);
  return j;
}

inline Json criterion_json(const checks::CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  return j;
}

}  // namespace contact::json_io
