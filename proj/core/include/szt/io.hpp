#pragma once

#include <stdexcept>
#include <string>

#include "szt/arrangement.hpp"
#include "szt/bipoly.hpp"
#include "szt/superspace.hpp"

namespace szt {

// Input format, JSON:
//   { "n": 2,
//     "hyperplanes": [ { "normal": ["1", "0"], "multiplicity": 2, "label": "a" },
//                      { "normal": [0, 1] } ] }
// Normal entries are integers or rational strings "p/q". Multiplicity
// defaults to 1 and expands to adjacent copies. Zero normals are rejected.

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Arrangement parse_arrangement(const std::string& text);
Arrangement load_arrangement(const std::string& path);
// expanded form: one entry per hyperplane, multiplicity 1, normals as strings
std::string arrangement_to_json(const Arrangement& A);

// "(1 + 2q + 3q^2) + t(2 + q) + t^2" style, grouped by the second variable
std::string series_to_text(const BiPoly& S, const std::string& v1, const std::string& v2);
// "x^2 + x + y" style, terms by decreasing exponents
std::string poly_to_text(const BiPoly& P, const std::string& v1, const std::string& v2);
// univariate by ascending stored power, printed in decreasing powers
std::string unipoly_to_text(const std::vector<Int>& coeffs, const std::string& var);

}  // namespace szt
