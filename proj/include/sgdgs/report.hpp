#pragma once

// JSON renderings of the library's reports. Big integers are strings; key
// order is fixed so output is byte-stable.

#include "certify.hpp"
#include "number_field.hpp"
#include "search.hpp"
#include "spectra.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sgdgs {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) { return to_string(v); }
inline Json to_json(const Rational& v) { return to_string(v); }

inline Json poly_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  Json j;
  j["ascending"] = coeffs;
  j["text"] = p.to_string();
  return j;
}

inline Json poly_json(const RatPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  Json j;
  j["ascending"] = coeffs;
  j["text"] = p.to_string();
  return j;
}

template <typename T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json graph_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u + 1, e.v + 1, e.sign}));
  Json j;
  j["n"] = g.order();
  j["edges"] = edges;
  return j;
}

inline Json factorization_json(const Factorization& f) {
  Json a = Json::array();
  for (const auto& pp : f.factors) {
    Json e;
    e["prime"] = to_string(pp.prime);
    e["exponent"] = pp.exponent;
    e["probable"] = pp.probable;
    a.push_back(e);
  }
  return a;
}

inline std::string verdict_text(const DgsCertificate& c) {
  if (c.certified()) return to_string(c.verdict);
  return std::string(to_string(c.verdict)) + "(" + c.reason + ")";
}

inline Json to_json(const DgsCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["charpoly"] = poly_json(c.charpoly);
  j["irreducible"] = c.irreducibility ? Json(c.irreducible()) : Json(nullptr);
  j["delta"] = c.delta ? to_json(*c.delta) : Json(nullptr);
  j["s"] = c.s ? to_json(*c.s) : Json(nullptr);
  j["s_factors"] = c.s_factorization ? factorization_json(*c.s_factorization) : Json(nullptr);
  j["s_odd"] = c.s_odd;
  j["s_squarefree"] = c.s_squarefree;
  j["verdict"] = verdict_text(c);
  if (c.cross_check) {
    Json cc;
    cc["note"] = c.cross_check->note;
    cc["agrees"] = c.cross_check->agrees;
    if (c.cross_check->identity) {
      cc["lhs"] = to_json(c.cross_check->identity->lhs);
      cc["rhs"] = to_json(c.cross_check->identity->rhs);
      cc["det_m"] = to_json(c.cross_check->identity->det_m);
      cc["delta_mtm"] = to_json(c.cross_check->identity->delta_mtm);
    }
    j["cross_check"] = cc;
  } else {
    j["cross_check"] = nullptr;
  }
  j["probabilistic_flags"] = c.probabilistic_flags;
  return j;
}

inline Json to_json(const QRecovery& r) {
  Json j;
  j["denominator"] = to_string(common_denominator(r.q));
  j["q"] = matrix_json(r.q);
  j["orthogonal"] = r.orthogonal;
  j["regular"] = r.regular;
  j["conjugating"] = r.conjugating;
  return j;
}

inline Json to_json(const QClassification& c) {
  Json j;
  j["tag"] = to_string(c.tag);
  j["permutation"] = c.permutation;
  j["signed_permutation"] = c.signed_permutation;
  j["block_diagonal"] = c.block_diagonal;
  j["anti_block_diagonal"] = c.anti_block_diagonal;
  j["split"] = c.split ? Json(*c.split) : Json(nullptr);
  return j;
}

inline Json to_json(const StructureReport& r) {
  Json j;
  j["precondition_failures"] = r.precondition_failures;
  j["charpoly"] = r.charpoly ? poly_json(*r.charpoly) : Json(nullptr);
  j["irreducible"] = r.irreducibility ? Json(r.irreducibility->irreducible()) : Json(nullptr);
  j["recovery"] = r.recovery ? to_json(*r.recovery) : Json(nullptr);
  j["classification"] = r.classification ? to_json(*r.classification) : Json(nullptr);
  j["q1_regular_orthogonal"] = r.q1_regular_orthogonal;
  j["q2_regular_orthogonal"] = r.q2_regular_orthogonal;
  j["holds"] = r.holds;
  return j;
}

inline Json to_json(const SymbolicEigenvector& xi) {
  Json entries = Json::array();
  for (const auto& p : xi.polynomials()) entries.push_back(poly_json(p));
  Json j;
  j["modulus"] = poly_json(xi.field->modulus());
  j["entries"] = entries;
  return j;
}

inline Json to_json(const BipartiteEigenReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json j;
  j["precondition_failures"] = r.precondition_failures;
  j["charpoly_a"] = r.charpoly_a ? poly_json(*r.charpoly_a) : Json(nullptr);
  j["charpoly_mmt"] = r.charpoly_mmt ? poly_json(*r.charpoly_mmt) : Json(nullptr);
  j["charpoly_a_irreducible"] = r.charpoly_a_irreducible;
  j["mmt_eigenvector"] = r.mmt_eigenvector;
  j["mmt_length_equality"] = r.mmt_length_equality;
  j["mmt_mtm_same_charpoly"] = r.mmt_mtm_same_charpoly;
  j["mmt_irreducible"] = r.mmt_irreducible;
  j["even_structure"] = r.even_structure;
  j["full_eigenvector"] = opt(r.full_eigenvector);
  j["full_length_equality"] = opt(r.full_length_equality);
  j["squares_eigenvectors"] = opt(r.squares_eigenvectors);
  j["reflected_eigenvector"] = opt(r.reflected_eigenvector);
  j["u"] = r.u_mmt ? to_json(*r.u_mmt) : Json(nullptr);
  j["xi"] = r.xi_a ? to_json(*r.xi_a) : Json(nullptr);
  j["passed"] = r.passed();
  return j;
}

inline Json to_json(const MateReport& r) {
  Json mates = Json::array();
  for (const auto& m : r.mates) {
    Json e;
    e["mate"] = graph_json(m.mate);
    e["frame"] = m.frame;
    e["recovery"] = m.recovery ? to_json(*m.recovery) : Json(nullptr);
    e["classification"] = m.classification ? to_json(*m.classification) : Json(nullptr);
    mates.push_back(e);
  }
  Json j;
  j["query"] = graph_json(r.query);
  j["search_space"] = r.search_space;
  j["examined"] = r.examined;
  j["cospectral"] = r.cospectral;
  j["mates"] = mates;
  return j;
}

}  // namespace sgdgs
