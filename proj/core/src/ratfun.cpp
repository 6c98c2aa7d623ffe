#include "rescycle/ratfun.hpp"

#include "rescycle/errors.hpp"

namespace rescycle {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFun::normalize() {
  if (den_.is_zero()) fail(ErrKind::Fragment, "division by zero polynomial");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_constant()) {
    auto qn = num_.try_divide(g), qd = den_.try_divide(g);
    if (!qn || !qd) fail(ErrKind::Internal, "gcd does not divide its arguments");
    num_ = *qn;
    den_ = *qd;
  }
  Rational lc = den_.leading_term().second;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

bool RatFun::is_polynomial() const {
  auto c = den_.as_constant();
  return c.has_value(); // canonical den has leading coeff 1, so constant den == 1
}

std::optional<Rational> RatFun::as_constant() const {
  if (!is_polynomial()) return std::nullopt;
  return num_.as_constant();
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) fail(ErrKind::Fragment, "division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::pow(int e) const {
  if (e == 0) return RatFun(Rational(1));
  RatFun base = *this;
  if (e < 0) {
    base = RatFun(Poly::constant(1)) / *this;
    e = -e;
  }
  RatFun r(Rational(1));
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

RatFun RatFun::derivative_z(int i) const {
  return RatFun(num_.derivative_z(i) * den_ - num_ * den_.derivative_z(i), den_ * den_);
}

RatFun RatFun::derivative_zb(int i) const {
  return RatFun(num_.derivative_zb(i) * den_ - num_ * den_.derivative_zb(i), den_ * den_);
}

Rational RatFun::eval(const std::vector<Rational>& zvals, const std::vector<Rational>& zbvals) const {
  Rational d = den_.eval(zvals, zbvals);
  if (d == 0) fail(ErrKind::Fragment, "evaluation point hits a denominator zero");
  return num_.eval(zvals, zbvals) / d;
}

std::string RatFun::to_string(const VarTable& vars) const {
  if (is_polynomial()) return num_.to_string(vars);
  std::string n = num_.to_string(vars);
  std::string d = den_.to_string(vars);
  bool n_atomic = num_.terms().size() <= 1;
  bool d_atomic = den_.terms().size() <= 1;
  std::string r = n_atomic ? n : "(" + n + ")";
  r += " / ";
  r += d_atomic ? d : "(" + d + ")";
  return r;
}

} // namespace rescycle
