#pragma once

#include <string>

#include "rescycle/errors.hpp"
#include "rescycle/rational.hpp"

namespace rescycle {

// Exact scalar of the shape  rat * (2*pi*i)^tpi.  The transcendental factor is
// never evaluated numerically; sums only combine equal powers.
struct Scalar {
  Rational rat{0};
  int tpi = 0;

  Scalar() = default;
  Scalar(Rational r, int t = 0) : rat(std::move(r)), tpi(t) {
    if (rat == 0) tpi = 0;
  }

  bool is_zero() const { return rat == 0; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.rat * b.rat, a.tpi + b.tpi);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.tpi != b.tpi)
      fail(ErrKind::Fragment, "cannot add scalars with distinct (2*pi*i) powers");
    return Scalar(a.rat + b.rat, a.tpi);
  }

  friend Scalar operator-(const Scalar& a) { return Scalar(-a.rat, a.tpi); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat == b.rat && a.tpi == b.tpi;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline std::string to_string(const Scalar& s) {
  std::string r = rat_to_string(s.rat);
  if (s.tpi != 0 && s.rat != 0) {
    r = (s.rat == 1 ? std::string() : r + "*");
    r += "(2πi)";
    if (s.tpi != 1) r += "^" + std::to_string(s.tpi);
  }
  return r;
}

} // namespace rescycle
