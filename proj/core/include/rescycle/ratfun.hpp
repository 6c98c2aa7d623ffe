#pragma once

#include <string>

#include "rescycle/poly.hpp"

namespace rescycle {

// Quotient num/den of polynomials, kept in canonical form:
//   den != 0, gcd(num, den) = 1, graded-lex leading coefficient of den = 1.
// Equality on canonical forms is exact equality of the functions.
class RatFun {
public:
  RatFun() : num_(Poly::zero()), den_(Poly::constant(1)) {}
  RatFun(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
  RatFun(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  std::optional<Rational> as_constant() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun pow(int e) const; // negative e inverts

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
  friend bool operator<(const RatFun& a, const RatFun& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RatFun derivative_z(int i) const;
  RatFun derivative_zb(int i) const;
  Rational eval(const std::vector<Rational>& zvals, const std::vector<Rational>& zbvals) const;

  std::string to_string(const VarTable& vars) const;

private:
  void normalize();
  Poly num_, den_;
};

} // namespace rescycle
