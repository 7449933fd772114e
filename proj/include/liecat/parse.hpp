#pragma once

#include <string>
#include <string_view>
#include <span>
#include <vector>

#include "liecat/lie_poly.hpp"
#include "liecat/scalar.hpp"

namespace liecat {

/// Grammar:
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := [coeff '*'] atom | '0'
///   coeff := p | p/q | '(' scalar ')'
///   atom  := generator | '[' expr ',' expr ']' | '(' expr ')'
/// where scalar may use `w` for sqrt(d) over Q(sqrt(d)), e.g. `((1/2)+(3/4)*w)*[x,y]`.
/// The result is normalized to the basis of `table`.
LiePoly parse_expr(std::string_view text, const TablePtr& table, const Field& field);

/// Canonical text: basis order, e.g. "x - 2*[x,y] + ((1)+(1)*w)*[x,[x,y]]"; "0" for zero.
/// parse_expr(format_expr(p)) == p.
std::string format_expr(const LiePoly& p);

/// Generator assignment "x=>[x,y]; y=>y". Keys are generators of `source`,
/// values are expressions over `target`. Generators left out map to
/// themselves when source and target are the same table, and are a BadSpec
/// error otherwise.
std::vector<LiePoly> parse_assignment(std::string_view text, const TablePtr& source, const TablePtr& target,
                                      const Field& field);

/// Inverse of parse_assignment: "x=>[x,y]; y=>y".
std::string format_assignment(std::span<const LiePoly> images, const TablePtr& source);

/// Scalar literal: integers, fractions, `w`, + - * / and parentheses.
Scalar parse_scalar(std::string_view text, const Field& field);

}  // namespace liecat
