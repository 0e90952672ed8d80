#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "weyl/matrix_eval.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

using Json = nlohmann::ordered_json;

inline Json to_json(const Coefficient& c) {
  Json out = Json::array();
  for (const auto& [hpow, g] : c.terms())
    out.push_back({{"hpow", hpow}, {"re", to_string(g.re)}, {"im", to_string(g.im)}});
  return out;
}

inline Coefficient coefficient_from_json(const Json& j) {
  Coefficient c;
  for (const Json& term : j)
    c.add(term.at("hpow").get<int>(),
          GaussianRational(rational_from_string(term.at("re").get<std::string>()),
                           rational_from_string(term.at("im").get<std::string>())));
  return c;
}

inline Generator generator_from_string(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'Q' && s[0] != 'P'))
    throw std::invalid_argument("bad generator name: '" + s + "'");
  const int index = std::stoi(s.substr(1));
  return s[0] == 'Q' ? Q(index) : P(index);
}

inline Json to_json(const FreePoly& p) {
  Json terms = Json::array();
  for (const auto& [word, coeff] : p.terms()) {
    Json w = Json::array();
    for (Generator g : word) w.push_back(to_string(g));
    terms.push_back({{"coeff", to_json(coeff)}, {"word", std::move(w)}});
  }
  return {{"f", p.dof()}, {"terms", std::move(terms)}};
}

inline FreePoly free_poly_from_json(const Json& j) {
  FreePoly p(j.at("f").get<int>());
  for (const Json& term : j.at("terms")) {
    Word w;
    for (const Json& g : term.at("word")) w.push_back(generator_from_string(g.get<std::string>()));
    p.add_term(std::move(w), coefficient_from_json(term.at("coeff")));
  }
  return p;
}

inline Json to_json(const WeylElement& x) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : x.terms())
    terms.push_back(
        {{"coeff", to_json(coeff)}, {"p_exp", mono.p_exp}, {"q_exp", mono.q_exp}});
  return {{"f", x.dof()}, {"terms", std::move(terms)}};
}

inline WeylElement weyl_element_from_json(const Json& j) {
  WeylElement x(j.at("f").get<int>());
  for (const Json& term : j.at("terms")) {
    NormalMonomial m;
    m.p_exp = term.at("p_exp").get<std::vector<int>>();
    m.q_exp = term.at("q_exp").get<std::vector<int>>();
    x.add_term(std::move(m), coefficient_from_json(term.at("coeff")));
  }
  return x;
}

inline Json to_json(const GaussianRational& g) {
  return Json::array({to_string(g.re), to_string(g.im)});
}

inline GaussianRational gaussian_from_json(const Json& j) {
  return {rational_from_string(j.at(0).get<std::string>()),
          rational_from_string(j.at(1).get<std::string>())};
}

inline Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const Json& j) {
  const int dim = static_cast<int>(j.size());
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j.at(i);
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("matrix rows must all have the same length");
    for (int k = 0; k < dim; ++k) m.at(i, k) = gaussian_from_json(row.at(k));
  }
  return m;
}

inline Json to_json(const Assignment& a) {
  Json mats = Json::object();
  for (const auto& [g, m] : a.matrices) mats[to_string(g)] = to_json(m);
  return {{"dim", a.dim}, {"hbar", to_json(a.hbar)}, {"matrices", std::move(mats)}};
}

inline Assignment assignment_from_json(const Json& j) {
  Assignment a;
  a.dim = j.at("dim").get<int>();
  if (j.contains("hbar")) a.hbar = gaussian_from_json(j.at("hbar"));
  for (const auto& [name, mat] : j.at("matrices").items()) {
    ExactMatrix m = matrix_from_json(mat);
    if (m.dim() != a.dim)
      throw std::invalid_argument("matrix '" + name + "' does not match assignment dim");
    a.matrices.emplace(generator_from_string(name), std::move(m));
  }
  return a;
}

}  // namespace weyl
