#include "rescycle/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rescycle/errors.hpp"

namespace rescycle {

Monomial Monomial::var(int i, int exp) {
  Monomial m;
  if (exp < 0) fail(ErrKind::Internal, "negative exponent in monomial");
  if (exp > 0) {
    m.z.resize(static_cast<std::size_t>(i) + 1, 0);
    m.z[static_cast<std::size_t>(i)] = exp;
  }
  return m;
}

Monomial Monomial::barvar(int i, int exp) {
  Monomial m;
  if (exp < 0) fail(ErrKind::Internal, "negative exponent in monomial");
  if (exp > 0) {
    m.zb.resize(static_cast<std::size_t>(i) + 1, 0);
    m.zb[static_cast<std::size_t>(i)] = exp;
  }
  return m;
}

void Monomial::trim() {
  while (!z.empty() && z.back() == 0) z.pop_back();
  while (!zb.empty() && zb.back() == 0) zb.pop_back();
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : z) d += e;
  for (int e : zb) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  if (o.z.size() > r.z.size()) r.z.resize(o.z.size(), 0);
  for (std::size_t i = 0; i < o.z.size(); ++i) r.z[i] += o.z[i];
  if (o.zb.size() > r.zb.size()) r.zb.resize(o.zb.size(), 0);
  for (std::size_t i = 0; i < o.zb.size(); ++i) r.zb[i] += o.zb[i];
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r = *this;
  if (o.z.size() > r.z.size() || o.zb.size() > r.zb.size()) {
    // o might still fit if its extra entries are zero, but trimmed vectors never have them
  }
  for (std::size_t i = 0; i < o.z.size(); ++i) {
    if (i >= r.z.size() || r.z[i] < o.z[i]) return std::nullopt;
    r.z[i] -= o.z[i];
  }
  for (std::size_t i = 0; i < o.zb.size(); ++i) {
    if (i >= r.zb.size() || r.zb[i] < o.zb[i]) return std::nullopt;
    r.zb[i] -= o.zb[i];
  }
  r.trim();
  return r;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  if (a.z != b.z) return std::lexicographical_compare(a.z.begin(), a.z.end(), b.z.begin(), b.z.end());
  return std::lexicographical_compare(a.zb.begin(), a.zb.end(), b.zb.begin(), b.zb.end());
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial::one(), c);
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  Monomial mm = m;
  mm.trim();
  p.add_term(mm, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<std::pair<Monomial, Rational>> Poly::as_single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool Poly::holomorphic() const {
  for (const auto& [m, c] : terms_)
    if (!m.holomorphic()) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) fail(ErrKind::Internal, "Poly::pow negative exponent");
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  auto ita = a.terms_.begin(), itb = b.terms_.begin();
  for (; ita != a.terms_.end() && itb != b.terms_.end(); ++ita, ++itb) {
    MonoLess less;
    if (less(ita->first, itb->first)) return true;
    if (less(itb->first, ita->first)) return false;
    if (ita->second != itb->second) return ita->second < itb->second;
  }
  return itb != b.terms_.end();
}

Poly Poly::derivative_z(int i) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.zdeg(i);
    if (e == 0) continue;
    Monomial d = m;
    d.z[static_cast<std::size_t>(i)] -= 1;
    d.trim();
    r.add_term(d, c * e);
  }
  return r;
}

Poly Poly::derivative_zb(int i) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.zbdeg(i);
    if (e == 0) continue;
    Monomial d = m;
    d.zb[static_cast<std::size_t>(i)] -= 1;
    d.trim();
    r.add_term(d, c * e);
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& zvals, const std::vector<Rational>& zbvals) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.z.size(); ++i)
      for (int e = 0; e < m.z[i]; ++e) t *= zvals.at(i);
    for (std::size_t i = 0; i < m.zb.size(); ++i)
      for (int e = 0; e < m.zb[i]; ++e) t *= zbvals.at(i);
    acc += t;
  }
  return acc;
}

Poly Poly::substitute_zero(const std::set<int>& vars) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    bool kill = false;
    for (int v : vars)
      if (m.zdeg(v) > 0 || m.zbdeg(v) > 0) {
        kill = true;
        break;
      }
    if (!kill) r.add_term(m, c);
  }
  return r;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial::one();
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < g.z.size(); ++i) g.z[i] = std::min(g.z[i], m.zdeg(static_cast<int>(i)));
    for (std::size_t i = 0; i < g.zb.size(); ++i) g.zb[i] = std::min(g.zb[i], m.zbdeg(static_cast<int>(i)));
  }
  g.trim();
  return g;
}

std::set<int> Poly::vars_used() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.z.size(); ++i)
      if (m.z[i] > 0) s.insert(static_cast<int>(i));
    for (std::size_t i = 0; i < m.zb.size(); ++i)
      if (m.zb[i] > 0) s.insert(static_cast<int>(i));
  }
  return s;
}

std::set<int> Poly::zvars_used() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.z.size(); ++i)
      if (m.z[i] > 0) s.insert(static_cast<int>(i));
  return s;
}

bool Poly::uses_var(int i) const {
  for (const auto& [m, c] : terms_)
    if (m.zdeg(i) > 0 || m.zbdeg(i) > 0) return true;
  return false;
}

std::pair<Monomial, Rational> Poly::leading_term() const {
  if (terms_.empty()) fail(ErrKind::Internal, "leading_term of zero polynomial");
  return *terms_.rbegin();
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
  if (d.is_zero()) fail(ErrKind::Fragment, "polynomial division by zero");
  Poly q;
  Poly r = *this;
  auto [dm, dc] = d.leading_term();
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading_term();
    auto m = rm.divide(dm);
    if (!m) return std::nullopt;
    Poly t = Poly::monomial(*m, rc / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

// ---------------------------------------------------------------------------
// gcd: primitive pseudo-remainder sequences, recursing through the "slots"
// (z_0, zbar_0, z_1, zbar_1, ...) so the formal conjugates are just more
// variables. Inputs stay small here; no subresultant tricks needed.
// ---------------------------------------------------------------------------

namespace {

int slot_of_z(int i) { return 2 * i; }
int slot_of_zb(int i) { return 2 * i + 1; }

int mono_slot_deg(const Monomial& m, int slot) {
  return (slot % 2 == 0) ? m.zdeg(slot / 2) : m.zbdeg(slot / 2);
}

Monomial mono_drop_slot(const Monomial& m, int slot) {
  Monomial r = m;
  if (slot % 2 == 0) {
    if (slot / 2 < static_cast<int>(r.z.size())) r.z[static_cast<std::size_t>(slot / 2)] = 0;
  } else {
    if (slot / 2 < static_cast<int>(r.zb.size())) r.zb[static_cast<std::size_t>(slot / 2)] = 0;
  }
  r.trim();
  return r;
}

Monomial mono_slot_power(int slot, int e) {
  return (slot % 2 == 0) ? Monomial::var(slot / 2, e) : Monomial::barvar(slot / 2, e);
}

int max_slot(const Poly& p) {
  int s = -1;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.z.size(); ++i)
      if (m.z[i] > 0) s = std::max(s, slot_of_z(static_cast<int>(i)));
    for (std::size_t i = 0; i < m.zb.size(); ++i)
      if (m.zb[i] > 0) s = std::max(s, slot_of_zb(static_cast<int>(i)));
  }
  return s;
}

int slot_degree(const Poly& p, int slot) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, mono_slot_deg(m, slot));
  return d;
}

// coefficients of p viewed as univariate in `slot`
std::map<int, Poly> univ(const Poly& p, int slot) {
  std::map<int, Poly> r;
  for (const auto& [m, c] : p.terms()) {
    int e = mono_slot_deg(m, slot);
    r[e] += Poly::monomial(mono_drop_slot(m, slot), c);
  }
  return r;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_term().second);
}

Poly content_in(const Poly& p, int slot) {
  Poly c;
  for (const auto& [e, coeff] : univ(p, slot)) c = Poly::gcd(c, coeff);
  return c;
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = a.try_divide(b);
  if (!q) fail(ErrKind::Internal, "inexact polynomial division in gcd");
  return *q;
}

// classical pseudo-remainder of u by v in `slot` (both nonzero, deg u >= deg v)
Poly prem(const Poly& u, const Poly& v, int slot) {
  int dv = slot_degree(v, slot);
  Poly lv;
  for (const auto& [e, coeff] : univ(v, slot))
    if (e == dv) lv = coeff;
  Poly r = u;
  while (!r.is_zero()) {
    int dr = slot_degree(r, slot);
    if (dr < dv) break;
    auto ur = univ(r, slot);
    Poly lr = ur.rbegin()->second;
    if (ur.rbegin()->first != dr) fail(ErrKind::Internal, "prem bookkeeping");
    Poly t = lr * Poly::monomial(mono_slot_power(slot, dr - dv), 1);
    r = lv * r - t * v;
  }
  return r;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  int sa = max_slot(a), sb = max_slot(b);
  int s = std::max(sa, sb);
  if (slot_degree(a, s) == 0) return Poly::gcd(a, content_in(b, s));
  if (slot_degree(b, s) == 0) return Poly::gcd(content_in(a, s), b);
  Poly ca = content_in(a, s), cb = content_in(b, s);
  Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
  Poly c = Poly::gcd(ca, cb);
  Poly g = pa, h = pb;
  if (slot_degree(g, s) < slot_degree(h, s)) std::swap(g, h);
  while (!h.is_zero()) {
    Poly r = prem(g, h, s);
    g = h;
    if (r.is_zero()) {
      h = r;
    } else {
      h = exact_div(r, content_in(r, s));
    }
  }
  return monic(g * c);
}

std::string Poly::to_string(const VarTable& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high-order terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool printed = false;
    if (cc != 1 || m.is_one()) {
      os << rat_to_string(cc);
      printed = true;
    }
    auto put = [&](const std::string& base, int e) {
      if (e == 0) return;
      if (printed) os << "*";
      os << base;
      if (e != 1) os << "^" << e;
      printed = true;
    };
    for (std::size_t i = 0; i < m.z.size(); ++i) put(vars.name(static_cast<int>(i)), m.z[i]);
    for (std::size_t i = 0; i < m.zb.size(); ++i)
      put("bar(" + vars.name(static_cast<int>(i)) + ")", m.zb[i]);
  }
  return os.str();
}

} // namespace rescycle
