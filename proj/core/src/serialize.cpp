#include "pcompact/serialize.hpp"

#include "pcompact/error.hpp"

namespace pcompact {

using nlohmann::json;

json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational string, got " + j.dump());
}

json cyc_to_json(const CycRational& x) {
  return json{{"base", std::string(field_name(x.field()))}, {"a", to_string(x.a())}, {"b", to_string(x.b())}};
}

CycRational cyc_from_json(const json& j) {
  if (j.is_string() || j.is_number()) return CycRational(rational_from_json(j));
  Field f = parse_field(j.at("base").get<std::string>());
  Rational a = rational_from_json(j.at("a"));
  Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
  if (f == Field::Q) {
    if (sgn(b) != 0) throw ParseError("Q element with nonzero b");
    return CycRational(a);
  }
  return CycRational(f, a, b);
}

json partition_to_json(const Partition& e) { return e.parts(); }

Partition partition_from_json(const json& j) {
  auto parts = j.get<std::vector<int>>();
  return Partition::from_parts(parts);
}

json sympoly_to_json(const SymPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"partition", e.parts()}, {"coeff", to_string(c)}});
  return json{{"nvars", f.nvars()}, {"terms", terms}};
}

SymPoly sympoly_from_json(const json& j) {
  SymPoly f(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) f.add_term(partition_from_json(t.at("partition")), rational_from_json(t.at("coeff")));
  return f;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

CycMatrix cyc_matrix_from_json(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  CycMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cyc_from_json(j.at(r).at(c));
  }
  return m;
}

}  // namespace pcompact
