#pragma once

#include <string>

#include <json.hpp>

#include "qperm/matrix.hpp"
#include "qperm/perm.hpp"

namespace qperm {

/*
 * Entry expression grammar for matrix files: signed sums of terms
 *   c | c*q^k | q | q^k | c*q^(p/d) | q^(p/d)
 * with rational c and k integer. Examples: "q^2", "1 - q - q^2",
 * "3/2*q^(1/2)". Errors carry the offset within the string.
 */
Laurent parse_entry(const std::string& text);

// Canonical printing; parse_entry(print_entry(v)) == v.
std::string print_entry(const Laurent& v);

// Matrix files: {"n": 3, "entries": [[...], ...]} where entries are
// expression strings or plain JSON numbers.
RingMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const RingMatrix& m);

// Rational (exponent) matrices: entries are integers or "p/q" strings.
ExponentMatrix exponent_matrix_from_json(const nlohmann::json& j);
nlohmann::json exponent_matrix_to_json(const ExponentMatrix& m);

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

// One-line integer array.
nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);

// Accepts cycle notation ("(12)(34)", "id") or a one-line JSON array.
Perm parse_perm_argument(const std::string& text, int n);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace qperm
