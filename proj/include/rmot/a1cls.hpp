#pragma once
// Named end-to-end checks over the A(1) family, the Smith construction and
// the window scans.  Each returns {tag, verdict, elapsed_ms, details}.

#include <string>
#include <vector>

#include "json.hpp"

namespace rmot {

const std::vector<std::string>& theorem_tags();
// Throws std::invalid_argument for an unknown tag.
nlohmann::json verify_theorem(const std::string& tag);
bool report_passed(const nlohmann::json& report);

// The rows of the cofiber table: vector, drawn (source, target) flags.
struct CofiberRow {
    std::string vector;
    char source, target;
};
const std::vector<CofiberRow>& cofiber_rows();

}  // namespace rmot
