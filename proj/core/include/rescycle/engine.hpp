#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rescycle/complexes.hpp"
#include "rescycle/current.hpp"
#include "rescycle/cycle.hpp"
#include "rescycle/monomial_ideal.hpp"

namespace rescycle {

enum class Mode { Auto, CI, CM, Universal, NonPure, Demo };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s); // Parse error on unknown mode

struct CaseOptions {
  std::optional<int> lift_bound;
  std::uint64_t seed = 0;
  std::string emit_intermediates; // target directory, empty = disabled
};

struct Case {
  std::string name; // label for reports (file stem)
  VarTable vars;
  MonomialIdeal ideal{0, {}};
  Mode mode = Mode::Auto;
  std::optional<FreeComplex> resolution;
  std::vector<Monomial> ci_tuple;
  // injected residue columns: currents[k-1][r] = entry r of the level-k column
  std::vector<std::vector<CurrentSum>> currents;
  CaseOptions options;
  std::string source; // validated input document, kept verbatim for round-trip
};

struct Report {
  std::string title;
  VarTable vars;
  Cycle computed;
  Cycle oracle;
  bool match = false;
  CurrentSum remainder; // nonzero when normalization left unrecognized terms
  std::vector<std::pair<std::string, std::string>> intermediates;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
};

// Koszul route for a regular sequence of pure powers:
//   (1/((2 pi i)^p p!)) tr(Dphi_1...Dphi_p R_p) vs the combinatorial cycle
Report verify_ci(const std::vector<Monomial>& f, const VarTable& vars);

// comparison route through a length-p resolution E of J and the Koszul complex
// of a pure-power tuple f inside J: R^E_p := a_p R^F_p for a lift a of the
// identity
Report verify_cm(const MonomialIdeal& J, const FreeComplex& E, const std::vector<Monomial>& f,
                 const VarTable& vars, const CaseOptions& options = {});

// localized route through the universal resolution at a minimal prime W,
// including the symbolic trace identity tr B = p! m z^(beta-1) dz
Report verify_universal(const MonomialIdeal& J, const std::vector<int>& W, const VarTable& vars);

// mixed-codimension sum over levels with residue columns restricted to the
// equidimensional parts of the cycle
Report verify_nonpure(const Case& c);

// worked embedded-point family J = (y^k, x^l y^m): reproduces the closed-form
// top current, the saturation length, and the cycle along {y=0}
Report demo_embedded(int k, int l, int m);

Report run_case(const Case& c);

} // namespace rescycle
