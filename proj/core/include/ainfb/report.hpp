#pragma once
#include "relations.hpp"

namespace ainfb {

// Deterministic renderings of verification results and type enumerations.
// Text is one line per relation plus indented witness lines on failure; JSON
// is newline-delimited records.
std::string render_text(const VerificationResult &res, const GradedModule &mod);
std::string render_json(const VerificationResult &res, const GradedModule &mod);

std::string render_enumeration_text(const std::vector<TypeParams> &rows);
std::string render_enumeration_json(const std::vector<TypeParams> &rows);

} // namespace ainfb
