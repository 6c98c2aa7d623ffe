#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rescycle/ratfun.hpp"

namespace rescycle {

// Basis monomial of the exterior algebra on the odd generators dzbar_i, dz_i.
// Canonical written order: dzbar factors by ascending index, then dz factors
// by ascending index; all reordering signs are absorbed into coefficients.
struct FormKey {
  std::vector<int> bars; // dzbar indices, strictly ascending
  std::vector<int> dzs;  // dz indices, strictly ascending

  int degree() const { return static_cast<int>(bars.size() + dzs.size()); }
  bool is_scalar() const { return bars.empty() && dzs.empty(); }
  friend bool operator==(const FormKey& a, const FormKey& b) {
    return a.bars == b.bars && a.dzs == b.dzs;
  }
  friend bool operator<(const FormKey& a, const FormKey& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.bars != b.bars) return a.bars < b.bars;
    return a.dzs < b.dzs;
  }
};

// sign of merging two canonical keys into one (wedge), nullopt when a
// generator repeats
std::optional<std::pair<FormKey, int>> merge_keys(const FormKey& a, const FormKey& b);

// Exterior form with RatFun coefficients; may be inhomogeneous.
class Form {
public:
  using CoeffMap = std::map<FormKey, RatFun>;

  Form() = default;
  static Form zero() { return Form(); }
  static Form scalar(const RatFun& c);
  static Form one() { return scalar(RatFun(Rational(1))); }
  static Form dz(int i);
  static Form dzbar(int i);
  static Form generator(const FormKey& k, const RatFun& c);

  bool is_zero() const { return c_.empty(); }
  const CoeffMap& coeffs() const { return c_; }
  const RatFun& coeff(const FormKey& k) const;
  std::optional<RatFun> as_scalar() const; // nullopt unless degree-0

  // max degree of a contributing key; 0 for the zero form
  int top_degree() const;
  // degree when all keys agree (zero form: 0), nullopt otherwise
  std::optional<int> homogeneous_degree() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  Form scaled(const RatFun& c) const;

  friend bool operator==(const Form& a, const Form& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }
  friend bool operator<(const Form& a, const Form& b) { return a.c_ < b.c_; }

  std::string to_string(const VarTable& vars) const;

  void set(const FormKey& k, const RatFun& c); // drops zeros

private:
  CoeffMap c_;
};

Form wedge(const Form& a, const Form& b);

// splits d into (dz-part, dzbar-part): d = holo + anti
std::pair<Form, Form> exterior_d(const Form& f);

std::string key_to_string(const FormKey& k, const VarTable& vars);

} // namespace rescycle
