#pragma once

#include <string>

#include "rescycle/engine.hpp"

namespace rescycle {

// Case documents are JSON objects with keys
//   variables   : ["x","y",...]                       (required)
//   ideal       : ["x^2*y", ...]   monomial generators (required)
//   mode        : "auto"|"ci"|"cm"|"universal"|"nonpure"|"demo"
//   resolution  : {"ranks":[1,2,1], "maps":[[["x*z","y*z"]], ...]}
//                 maps[k] is a ranks[k] x ranks[k+1] matrix of polynomials
//   ci_tuple    : ["x^2","y^3"]
//   currents    : [["res(1/z)", ...], ...]  one column of entries per level
//   options     : {"lift_bound":N, "seed":S, "emit_intermediates":"dir"}
// Unknown keys are rejected. A document wrapped as {"case": {...}, ...}
// (the structured report layout) is unwrapped first.
Case parse_case_text(const std::string& text, const std::string& name = "");
Case parse_case_file(const std::string& path);

std::string render_report_text(const Report& r);
std::string render_report_structured(const Case& c, const Report& r);

} // namespace rescycle
