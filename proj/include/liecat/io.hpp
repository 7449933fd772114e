#pragma once

#include <span>

#include <json.hpp>

#include "liecat/category.hpp"
#include "liecat/endomorphism.hpp"
#include "liecat/lie_poly.hpp"

namespace liecat {

/// [{"word": "xxy", "bracketing": "[x,[x,y]]", "coeff": "2"}, ...] in basis order.
nlohmann::json terms_json(const LiePoly& p);

/// {"x": "[x,y]", "y": "y"}
nlohmann::json assignment_json(std::span<const LiePoly> images, const TablePtr& source);

/// Words, bracketings and per-degree dimensions.
nlohmann::json basis_json(const BasisTable& table);

nlohmann::json point_json(const Point& nu);

}  // namespace liecat
