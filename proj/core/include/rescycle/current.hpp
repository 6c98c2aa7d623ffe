#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rescycle/cycle.hpp"
#include "rescycle/form.hpp"
#include "rescycle/scalar.hpp"
#include "rescycle/supermatrix.hpp"

namespace rescycle {

// one residue factor dbar(1/z_var^exp)
struct ResFactor {
  int var = 0;
  int exp = 1;

  friend bool operator==(const ResFactor& a, const ResFactor& b) {
    return a.var == b.var && a.exp == b.exp;
  }
  friend bool operator<(const ResFactor& a, const ResFactor& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.exp < b.exp;
  }
};

// Placeholder for a current known only through bounds: bidegree (holo_deg,
// anti_deg) and support contained in V(support).  It survives every linear
// operation unchanged and is killed exactly by the dimension principle.
struct OpaquePM {
  int holo_deg = 0;
  int anti_deg = 0;
  std::vector<int> support; // strictly ascending variable indices
  std::string label;

  int parity() const { return (holo_deg + anti_deg) & 1; }

  friend bool operator==(const OpaquePM& a, const OpaquePM& b) {
    return a.holo_deg == b.holo_deg && a.anti_deg == b.anti_deg && a.support == b.support &&
           a.label == b.label;
  }
  friend bool operator<(const OpaquePM& a, const OpaquePM& b) {
    if (a.holo_deg != b.holo_deg) return a.holo_deg < b.holo_deg;
    if (a.anti_deg != b.anti_deg) return a.anti_deg < b.anti_deg;
    if (a.support != b.support) return a.support < b.support;
    return a.label < b.label;
  }
};

// One term of the supported current fragment, written in the fixed order
//   (2*pi*i)^tpi * smooth ^ pv-factors ^ residue-factors ^ opaque.
// smooth carries the full rational-function coefficient (and all dz/dzbar
// data); pv holds principal-value factors pv(1/z_v^e) keyed by variable; res
// is the ascending list of residue factors.  Canonical terms have: smooth
// denominators free of pv/res variables and of monomial z-content, numerators
// free of res variables, no dzbar_v alongside a residue in v, and res sorted
// strictly ascending.
struct CurrentTerm {
  int tpi = 0;
  Form smooth = Form::one();
  std::map<int, int> pv;
  std::vector<ResFactor> res;
  std::optional<OpaquePM> opaque;
};

class CurrentSum {
public:
  CurrentSum() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::vector<CurrentTerm>& terms() const { return terms_; }

  CurrentSum& operator+=(const CurrentSum& o);
  friend CurrentSum operator+(CurrentSum a, const CurrentSum& b) { return a += b; }
  friend CurrentSum operator-(const CurrentSum& a, const CurrentSum& b);
  friend bool operator==(const CurrentSum& a, const CurrentSum& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const CurrentSum& a, const CurrentSum& b) { return !(a == b); }

  // rewrites raw terms into canonical ones (may split / vanish) and merges
  static CurrentSum from_raw(std::vector<CurrentTerm> raw);

private:
  std::vector<CurrentTerm> terms_; // canonical, sorted by structural key
};

bool operator==(const CurrentTerm& a, const CurrentTerm& b);
inline bool operator!=(const CurrentTerm& a, const CurrentTerm& b) { return !(a == b); }

CurrentSum current_from_form(const Form& f, int tpi = 0);
CurrentSum current_from_term(const CurrentTerm& t);
CurrentSum pv_current(int var, int exp);
CurrentSum res_current(int var, int exp);
CurrentSum opaque_current(const OpaquePM& op);

CurrentSum negate(const CurrentSum& c);
CurrentSum scale(const CurrentSum& c, const Scalar& s);

// graded product; Unsupported when two opaque factors meet, Fragment when the
// rewrite rules cannot canonicalize the result
CurrentSum current_mul(const CurrentSum& a, const CurrentSum& b);

// dbar as an odd derivation: dbar(pv(1/z^e)) = dbar(1/z^e), dbar(res) = 0
CurrentSum dbar_current(const CurrentSum& c);

// multiply by the indicator of a union of coordinate planes V(S_1) u ... u
// V(S_r); each S_j a strictly ascending list of variable indices
CurrentSum restrict_to(const CurrentSum& c, const std::vector<std::vector<int>>& components);

// drop every piece whose support bound is too small for its antiholomorphic
// degree: |res vars u opaque support| > (#dzbar + #res + opaque anti degree)
CurrentSum dimension_principle_reduce(const CurrentSum& c);

struct Normalized {
  Cycle cycle;
  CurrentSum remainder; // terms that are not a constant multiple of a plane
};

// recognize constant * dz_S ^ dbar(1/z_{s_1}) ^ ... as masses on V(S)
Normalized normalize_to_cycle(const CurrentSum& c);

// dbar(1/z_{v_p}^{e_p}) ^ ... ^ dbar(1/z_{v_1}^{e_1}) for the tuple
// (z_{v_1}^{e_1}, ..., z_{v_p}^{e_p})
CurrentSum ch_product(const std::vector<std::pair<int, int>>& powers);

// entry hooks so SuperMat<CurrentSum> composes with form matrices
std::optional<int> entry_degree(const CurrentSum& c);
inline CurrentSum entry_negate(const CurrentSum& c) { return negate(c); }
inline CurrentSum entry_mul(const CurrentSum& a, const CurrentSum& b) { return current_mul(a, b); }
inline CurrentSum entry_mul(const Form& a, const CurrentSum& b) {
  return current_mul(current_from_form(a), b);
}
inline CurrentSum entry_mul(const CurrentSum& a, const Form& b) {
  return current_mul(a, current_from_form(b));
}

std::string to_string(const CurrentTerm& t, const VarTable& vars);
std::string to_string(const CurrentSum& c, const VarTable& vars);
std::string to_string(const SuperMat<CurrentSum>& m, const VarTable& vars);

} // namespace rescycle
