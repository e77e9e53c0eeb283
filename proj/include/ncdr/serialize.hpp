#pragma once

#include <json.hpp>

#include "ncdr/algebra.hpp"
#include "ncdr/matrix.hpp"

namespace ncdr {

/// {name, dim, structure: flat row-major "p/q" strings, conj_signs}.
nlohmann::json algebra_to_json(const AlgebraSpec& alg);
/// Validates the axioms unless `validate` is false.
AlgebraPtr algebra_from_json(const nlohmann::json& j, bool validate = true);

/// Element as an array of coordinate strings.
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

/// Rational matrix as a nested array of "p/q" strings.
nlohmann::json grid_to_json(const QMatrix& m);
QMatrix grid_from_json(const nlohmann::json& j);

}  // namespace ncdr
