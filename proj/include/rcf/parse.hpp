#pragma once

#include <istream>
#include <string>

#include "rcf/order.hpp"
#include "rcf/residue_field.hpp"

namespace rcf {

/// zsqrt:N | quad:D:c | max:D | rel:d:n | maxbiquad:d:n
Order parse_order(const std::string & spec);

/// Exact element expression over F: integers, +, -, *, /, parentheses,
/// w (the second integral basis element) and sqrt(k) for k a rational
/// square times a radicand of F. Throws std::invalid_argument.
Elem parse_elem(const FieldPtr & F, const std::string & expr);
QuadElem parse_quad(const QuadField & F, const std::string & expr);

/// Ideal of O generated by comma-separated elements.
OrderIdeal parse_ideal(const Order & O, const std::string & gens);

/// One integer coefficient per line, constant term first; blank lines and
/// lines starting with # are skipped.
IntPoly parse_poly(std::istream & in);
IntPoly read_poly_file(const std::string & path);

} // namespace rcf
