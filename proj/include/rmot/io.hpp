#pragma once
// Text, JSON and DOT formats.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmot/fmodule.hpp"
#include "rmot/realize.hpp"
#include "rmot/steenrod.hpp"

namespace rmot {

struct ParseError : std::runtime_error {
    ParseError(const std::string& input, size_t pos, const std::string& msg);
    size_t pos;
};

// Terms separated by '+'; a term is a product of factors t, t^a, r, r^b, 1,
// Sq<n>, read left to right.  "Sq2 Sq2", "t Sq3 Sq1 + Sq4".
std::vector<SqWord> parse_terms(const std::string& s);
SteenrodElement parse_element(const std::string& s);  // parsed, then Adem-reduced

nlohmann::json module_to_json(const FModule& m);
FModule module_from_json(const nlohmann::json& j);  // throws ParseError-like std::invalid_argument
nlohmann::json classical_to_json(const ClassicalModule& m);
ClassicalModule classical_from_json(const nlohmann::json& j);
// Which of the two schemas `j` uses (classical degrees are plain integers).
bool is_classical_json(const nlohmann::json& j);

// Sq1 black, Sq2 blue, Sq4 red, Sq8 green; dashed when the coefficient involves t.
std::string module_to_dot(const FModule& m, const std::string& title = "M");
std::string classical_to_dot(const ClassicalModule& m, const std::string& title = "M");

}  // namespace rmot
