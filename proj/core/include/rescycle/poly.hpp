#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rescycle/rational.hpp"
#include "rescycle/vars.hpp"

namespace rescycle {

// Monomial in the variables z_i and their formal conjugates zbar_i.
// Exponent vectors are kept trimmed (no trailing zeros) so equal monomials
// compare equal regardless of how many variables the context declares.
struct Monomial {
  std::vector<int> z;  // z[i]  = exponent of z_i
  std::vector<int> zb; // zb[i] = exponent of zbar_i

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int exp = 1);
  static Monomial barvar(int i, int exp = 1);

  void trim();
  bool is_one() const { return z.empty() && zb.empty(); }
  int total_degree() const;
  int zdeg(int i) const { return i < static_cast<int>(z.size()) ? z[static_cast<std::size_t>(i)] : 0; }
  int zbdeg(int i) const { return i < static_cast<int>(zb.size()) ? zb[static_cast<std::size_t>(i)] : 0; }
  bool holomorphic() const { return zb.empty(); }

  Monomial operator*(const Monomial& o) const;
  // exact division; nullopt when some exponent of o exceeds this
  std::optional<Monomial> divide(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.z == b.z && a.zb == b.zb; }
};

// graded-lex: total degree first, then the z exponent block, then the zbar block
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
  using TermMap = std::map<Monomial, Rational, MonoLess>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c);
  static Poly variable(int i) { return monomial(Monomial::var(i), 1); }
  static Poly barvariable(int i) { return monomial(Monomial::barvar(i), 1); }
  static Poly monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // nullopt unless the poly is a constant
  std::optional<Rational> as_constant() const;
  // nullopt unless the poly is c * (single monomial)
  std::optional<std::pair<Monomial, Rational>> as_single_term() const;

  const TermMap& terms() const { return terms_; }
  int total_degree() const; // 0 for the zero poly
  bool holomorphic() const; // no zbar variable occurs

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;
  Poly pow(int e) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // arbitrary strict order for use as container key
  friend bool operator<(const Poly& a, const Poly& b);

  Poly derivative_z(int i) const;
  Poly derivative_zb(int i) const;
  Rational eval(const std::vector<Rational>& zvals, const std::vector<Rational>& zbvals) const;
  // set z_i = zbar_i = 0 for every i in vars
  Poly substitute_zero(const std::set<int>& vars) const;

  // gcd of all monomials
  Monomial monomial_content() const;
  // variable indices occurring with positive exponent (z and zbar merged)
  std::set<int> vars_used() const;
  std::set<int> zvars_used() const;
  bool uses_var(int i) const;

  // leading term under graded-lex
  std::pair<Monomial, Rational> leading_term() const;

  // exact division; nullopt when the division leaves a remainder
  std::optional<Poly> try_divide(const Poly& d) const;

  // gcd over Q[z, zbar], normalized so the graded-lex leading coefficient is 1
  static Poly gcd(const Poly& a, const Poly& b);

  std::string to_string(const VarTable& vars) const;

private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
  friend struct PolyOps;
};

} // namespace rescycle
