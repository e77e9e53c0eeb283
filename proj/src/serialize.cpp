#include "ncdr/serialize.hpp"

namespace ncdr {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected rational string, got " + j.dump());
}

}  // namespace

json algebra_to_json(const AlgebraSpec& alg) {
  json structure = json::array();
  for (const auto& c : alg.structure()) structure.push_back(to_string(c));
  return json{{"name", alg.name()}, {"dim", alg.dim()}, {"structure", structure}, {"conj_signs", alg.conj_signs()}};
}

AlgebraPtr algebra_from_json(const json& j, bool validate) {
  try {
    const auto name = j.at("name").get<std::string>();
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Scalar> structure;
    for (const auto& v : j.at("structure")) structure.push_back(scalar_from_json(v));
    std::vector<int> signs;
    if (j.contains("conj_signs") && !j.at("conj_signs").is_null()) signs = j.at("conj_signs").get<std::vector<int>>();
    return validate ? AlgebraSpec::create(name, dim, std::move(structure), std::move(signs))
                    : AlgebraSpec::unchecked(name, dim, std::move(structure), std::move(signs));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("algebra spec: ") + e.what());
  }
}

json element_to_json(const Element& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(to_string(c));
  return out;
}

Element element_from_json(const AlgebraPtr& alg, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be an array of coordinates");
  std::vector<Scalar> coords;
  for (const auto& v : j) coords.push_back(scalar_from_json(v));
  return Element(alg, std::move(coords));
}

json grid_to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix grid_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "grid must be a nested array");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j.at(r).is_array() || j.at(r).size() != cols) throw Error(ErrorCode::ParseError, "ragged grid");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j.at(r).at(c));
  }
  return m;
}

}  // namespace ncdr
