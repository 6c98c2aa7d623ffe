#include "rescycle/current.hpp"

#include <algorithm>
#include <set>

#include "rescycle/errors.hpp"

namespace rescycle {

namespace {

// parity (+1/-1) of sorting by variable, 0 when a variable repeats
int sort_res(std::vector<ResFactor>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j].var < v[j - 1].var; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].var == v[i - 1].var) return 0;
  return sign;
}

int cmp_res(const std::vector<ResFactor>& a, const std::vector<ResFactor>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_opaque(const std::optional<OpaquePM>& a, const std::optional<OpaquePM>& b) {
  if (a.has_value() != b.has_value()) return a ? 1 : -1;
  if (!a || *a == *b) return 0;
  return *a < *b ? -1 : 1;
}

// comparison on everything except the smooth factor; the merge key
struct StructLess {
  bool operator()(const CurrentTerm& a, const CurrentTerm& b) const {
    if (a.tpi != b.tpi) return a.tpi < b.tpi;
    if (a.pv != b.pv) return a.pv < b.pv;
    if (int c = cmp_res(a.res, b.res)) return c < 0;
    return cmp_opaque(a.opaque, b.opaque) < 0;
  }
};

std::vector<CurrentTerm> merge_terms(std::vector<CurrentTerm>&& in) {
  std::map<CurrentTerm, Form, StructLess> acc;
  for (auto& t : in) {
    Form sm = std::move(t.smooth);
    t.smooth = Form::zero();
    acc[std::move(t)] += sm;
  }
  std::vector<CurrentTerm> out;
  for (auto& [key, sm] : acc) {
    if (sm.is_zero()) continue;
    CurrentTerm t = key;
    t.smooth = sm;
    out.push_back(std::move(t));
  }
  return out;
}

// Rewrites one term (res already sorted, distinct) into canonical pieces:
//  - monomial z-content of each denominator becomes a pv factor,
//  - numerator powers are absorbed: z^k pv(1/z^e) -> pv(1/z^(e-k)) or z^(k-e),
//    z^k dbar(1/z^e) -> dbar(1/z^(e-k)) or 0,
//  - zbar_v and dzbar_v kill a residue factor in v,
//  - leftover residue variables in a denominator leave the fragment.
// Splits per form key and per numerator monomial because the absorptions
// differ between them.
void canonicalize_into(CurrentTerm t, std::vector<CurrentTerm>& out) {
  if (t.smooth.is_zero()) return;
  std::set<int> resvars;
  for (const auto& r : t.res) resvars.insert(r.var);

  for (auto it = t.pv.begin(); it != t.pv.end();) {
    if (it->second < 0) fail(ErrKind::Internal, "pv factor with negative exponent");
    if (it->second == 0) {
      it = t.pv.erase(it);
      continue;
    }
    if (resvars.count(it->first))
      fail(ErrKind::Fragment, "pv and residue factors share a variable");
    ++it;
  }

  for (const auto& [key, coef] : t.smooth.coeffs()) {
    bool dead = false;
    for (int b : key.bars)
      if (resvars.count(b)) { dead = true; break; }
    if (dead) continue; // dzbar_v ^ dbar(1/z_v^e) = 0

    Poly den = coef.den();
    std::map<int, int> pv = t.pv;
    Monomial content = den.monomial_content();
    if (!content.z.empty()) {
      Monomial zpart;
      zpart.z = content.z;
      zpart.trim();
      auto quotient = den.try_divide(Poly::monomial(zpart, Rational(1)));
      if (!quotient) fail(ErrKind::Internal, "denominator content division failed");
      den = *quotient;
      for (std::size_t v = 0; v < zpart.z.size(); ++v)
        if (zpart.z[v] > 0) {
          if (resvars.count(static_cast<int>(v)))
            fail(ErrKind::Fragment, "denominator pole on a residue variable");
          pv[static_cast<int>(v)] += zpart.z[v];
        }
    }
    for (int v : resvars)
      if (den.uses_var(v)) fail(ErrKind::Fragment, "denominator involves a residue variable");

    for (const auto& [mono, c] : coef.num().terms()) {
      bool zero = false;
      for (int v : resvars)
        if (mono.zbdeg(v) > 0) { zero = true; break; } // zbar_v dbar(1/z_v^e) = 0
      if (zero) continue;

      Monomial nm = mono;
      std::map<int, int> npv = pv;
      std::vector<ResFactor> nres = t.res;
      for (auto& r : nres) {
        int k = nm.zdeg(r.var);
        if (k == 0) continue;
        if (k >= r.exp) { zero = true; break; } // z^e dbar(1/z^e) = dbar(1) = 0
        r.exp -= k;
        nm.z[static_cast<std::size_t>(r.var)] = 0;
      }
      if (zero) continue;
      for (auto it = npv.begin(); it != npv.end();) {
        int k = nm.zdeg(it->first);
        if (k == 0) {
          ++it;
        } else if (k < it->second) {
          it->second -= k;
          nm.z[static_cast<std::size_t>(it->first)] = 0;
          ++it;
        } else {
          nm.z[static_cast<std::size_t>(it->first)] = k - it->second;
          it = npv.erase(it);
        }
      }
      nm.trim();

      CurrentTerm piece;
      piece.tpi = t.tpi;
      piece.smooth = Form::generator(key, RatFun(Poly::monomial(nm, c), den));
      piece.pv = std::move(npv);
      piece.res = std::move(nres);
      piece.opaque = t.opaque;
      out.push_back(std::move(piece));
    }
  }
}

} // namespace

bool operator==(const CurrentTerm& a, const CurrentTerm& b) {
  return a.tpi == b.tpi && a.smooth == b.smooth && a.pv == b.pv && a.res == b.res &&
         a.opaque == b.opaque;
}

CurrentSum CurrentSum::from_raw(std::vector<CurrentTerm> raw) {
  std::vector<CurrentTerm> canon;
  for (auto& t : raw) {
    for (const auto& r : t.res)
      if (r.exp <= 0) fail(ErrKind::Internal, "residue factor with nonpositive exponent");
    int sgn = sort_res(t.res);
    if (sgn == 0) continue; // repeated residue variable: the term vanishes
    if (sgn < 0) t.smooth = -t.smooth;
    canonicalize_into(std::move(t), canon);
  }
  CurrentSum c;
  c.terms_ = merge_terms(std::move(canon));
  return c;
}

CurrentSum& CurrentSum::operator+=(const CurrentSum& o) {
  std::vector<CurrentTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  terms_ = merge_terms(std::move(all));
  return *this;
}

CurrentSum operator-(const CurrentSum& a, const CurrentSum& b) { return a + negate(b); }

CurrentSum current_from_form(const Form& f, int tpi) {
  CurrentTerm t;
  t.tpi = tpi;
  t.smooth = f;
  return CurrentSum::from_raw({std::move(t)});
}

CurrentSum current_from_term(const CurrentTerm& t) { return CurrentSum::from_raw({t}); }

CurrentSum pv_current(int var, int exp) {
  if (exp < 0) fail(ErrKind::Internal, "pv factor with negative exponent");
  CurrentTerm t;
  if (exp > 0) t.pv[var] = exp;
  return CurrentSum::from_raw({std::move(t)});
}

CurrentSum res_current(int var, int exp) {
  if (exp <= 0) fail(ErrKind::Internal, "residue factor with nonpositive exponent");
  CurrentTerm t;
  t.res.push_back(ResFactor{var, exp});
  return CurrentSum::from_raw({std::move(t)});
}

CurrentSum opaque_current(const OpaquePM& op) {
  CurrentTerm t;
  t.opaque = op;
  return CurrentSum::from_raw({std::move(t)});
}

CurrentSum negate(const CurrentSum& c) { return scale(c, Scalar(Rational(-1))); }

CurrentSum scale(const CurrentSum& c, const Scalar& s) {
  if (s.is_zero()) return {};
  std::vector<CurrentTerm> out = c.terms();
  for (auto& t : out) {
    t.tpi += s.tpi;
    t.smooth = t.smooth.scaled(RatFun(s.rat));
  }
  return CurrentSum::from_raw(std::move(out));
}

CurrentSum current_mul(const CurrentSum& a, const CurrentSum& b) {
  std::vector<CurrentTerm> raw;
  for (const auto& ta : a.terms()) {
    const int ares = static_cast<int>(ta.res.size());
    const int aop = ta.opaque ? ta.opaque->parity() : 0;
    for (const auto& tb : b.terms()) {
      if (ta.opaque && tb.opaque)
        fail(ErrKind::Unsupported, "product of two opaque current factors");
      // b's residue block crosses a's opaque factor
      const int rescross = (static_cast<int>(tb.res.size()) * aop) & 1;
      Form sm;
      for (const auto& [kb, cb] : tb.smooth.coeffs()) {
        // b's smooth piece crosses a's residue block and opaque factor
        int sgn = (kb.degree() * (ares + aop) + rescross) & 1;
        sm += wedge(ta.smooth, Form::generator(kb, sgn ? -cb : cb));
      }
      if (sm.is_zero()) continue;
      CurrentTerm t;
      t.tpi = ta.tpi + tb.tpi;
      t.smooth = std::move(sm);
      t.pv = ta.pv;
      for (const auto& [v, e] : tb.pv) t.pv[v] += e;
      t.res = ta.res;
      t.res.insert(t.res.end(), tb.res.begin(), tb.res.end());
      t.opaque = ta.opaque ? ta.opaque : tb.opaque;
      raw.push_back(std::move(t));
    }
  }
  return CurrentSum::from_raw(std::move(raw));
}

CurrentSum dbar_current(const CurrentSum& c) {
  std::vector<CurrentTerm> raw;
  for (const auto& t : c.terms()) {
    if (t.opaque) fail(ErrKind::Unsupported, "dbar of an opaque current factor");
    Form anti = exterior_d(t.smooth).second;
    if (!anti.is_zero()) {
      CurrentTerm nt = t;
      nt.smooth = std::move(anti);
      raw.push_back(std::move(nt));
    }
    for (const auto& [v, e] : t.pv)
      for (const auto& [key, cf] : t.smooth.coeffs()) {
        CurrentTerm nt;
        nt.tpi = t.tpi;
        nt.smooth = Form::generator(key, (key.degree() & 1) ? -cf : cf);
        nt.pv = t.pv;
        nt.pv.erase(v);
        nt.res = t.res;
        nt.res.insert(nt.res.begin(), ResFactor{v, e});
        raw.push_back(std::move(nt));
      }
  }
  return CurrentSum::from_raw(std::move(raw));
}

CurrentSum restrict_to(const CurrentSum& c, const std::vector<std::vector<int>>& components) {
  std::vector<CurrentTerm> kept;
  for (const auto& t : c.terms()) {
    if (t.opaque) fail(ErrKind::Fragment, "restriction of an opaque current factor");
    std::set<int> resvars;
    for (const auto& r : t.res) resvars.insert(r.var);
    for (const auto& [key, coef] : t.smooth.coeffs()) {
      const int q = static_cast<int>(key.bars.size() + t.res.size());
      bool keep = false, undecided = false;
      for (const auto& S : components) {
        if (S.empty()) { keep = true; break; } // V(empty) is the whole space
        bool sub = true;
        for (int s : S)
          if (!resvars.count(s)) { sub = false; break; }
        if (sub) { keep = true; break; } // support already inside V(S)
        // no residue factor: standard extensions put no mass on V(S)
        if (t.res.empty()) continue;
        std::set<int> T = resvars;
        T.insert(S.begin(), S.end());
        // 1_{V(S)} (this piece) is supported in V(T); it survives only where
        // the denominator degenerates, so bound that locus and compare
        // codimension against the antiholomorphic degree q
        Poly rden = coef.den().substitute_zero(T);
        if (rden.is_zero()) {
          if (static_cast<int>(T.size()) > q) continue;
          undecided = true;
        } else if (rden.is_constant()) {
          continue; // denominator stays nonzero near V(T): no mass survives
        } else {
          if (static_cast<int>(T.size()) + 1 > q) continue;
          undecided = true;
        }
      }
      if (keep)
        kept.push_back(CurrentTerm{t.tpi, Form::generator(key, coef), t.pv, t.res, t.opaque});
      else if (undecided)
        fail(ErrKind::Fragment, "restriction of a current piece is undecidable in this fragment");
    }
  }
  return CurrentSum::from_raw(std::move(kept));
}

CurrentSum dimension_principle_reduce(const CurrentSum& c) {
  std::vector<CurrentTerm> kept;
  for (const auto& t : c.terms()) {
    std::set<int> supp;
    for (const auto& r : t.res) supp.insert(r.var);
    if (t.opaque) supp.insert(t.opaque->support.begin(), t.opaque->support.end());
    const int extra = static_cast<int>(t.res.size()) + (t.opaque ? t.opaque->anti_deg : 0);
    for (const auto& [key, cf] : t.smooth.coeffs()) {
      int q = static_cast<int>(key.bars.size()) + extra;
      if (static_cast<int>(supp.size()) > q) continue;
      kept.push_back(CurrentTerm{t.tpi, Form::generator(key, cf), t.pv, t.res, t.opaque});
    }
  }
  return CurrentSum::from_raw(std::move(kept));
}

Normalized normalize_to_cycle(const CurrentSum& c) {
  Normalized out;
  std::vector<CurrentTerm> rem;
  for (const auto& t : c.terms()) {
    std::vector<int> resv;
    bool exps_one = true;
    for (const auto& r : t.res) {
      resv.push_back(r.var);
      if (r.exp != 1) exps_one = false;
    }
    const bool shape_ok = !t.opaque && t.pv.empty() && exps_one;
    const int p = static_cast<int>(t.res.size());
    for (const auto& [key, cf] : t.smooth.coeffs()) {
      std::optional<Rational> cst;
      if (shape_ok && key.bars.empty() && key.dzs == resv) cst = cf.as_constant();
      if (cst && *cst != 0) {
        // stored order dz_{s_1}..dz_{s_p} ^ dbar(1/z_{s_1})..dbar(1/z_{s_p})
        // versus the plane current's dbar(1/z_{s_p})..dbar(1/z_{s_1}) ^ dz_{s_1}..dz_{s_p}
        int sigma = ((p * (p + 1) / 2) % 2) ? -1 : 1;
        out.cycle.add(resv, Scalar(*cst * Rational(sigma), p + t.tpi));
      } else {
        rem.push_back(CurrentTerm{t.tpi, Form::generator(key, cf), t.pv, t.res, t.opaque});
      }
    }
  }
  out.remainder = CurrentSum::from_raw(std::move(rem));
  return out;
}

CurrentSum ch_product(const std::vector<std::pair<int, int>>& powers) {
  CurrentTerm t;
  for (auto it = powers.rbegin(); it != powers.rend(); ++it)
    t.res.push_back(ResFactor{it->first, it->second});
  return CurrentSum::from_raw({std::move(t)});
}

std::optional<int> entry_degree(const CurrentSum& c) {
  std::optional<int> d;
  for (const auto& t : c.terms()) {
    const int extra = static_cast<int>(t.res.size()) +
                      (t.opaque ? t.opaque->holo_deg + t.opaque->anti_deg : 0);
    for (const auto& [key, cf] : t.smooth.coeffs()) {
      int dd = key.degree() + extra;
      if (d && *d != dd) return std::nullopt;
      d = dd;
    }
  }
  return d.value_or(0);
}

std::string to_string(const CurrentTerm& t, const VarTable& vars) {
  std::string s;
  if (t.tpi != 0) {
    s += "(2πi)";
    if (t.tpi != 1) s += "^" + std::to_string(t.tpi);
    s += "*";
  }
  s += "(" + t.smooth.to_string(vars) + ")";
  for (const auto& [v, e] : t.pv) {
    s += "^pv(1/" + vars.name(v);
    if (e != 1) s += "^" + std::to_string(e);
    s += ")";
  }
  for (const auto& r : t.res) {
    s += "^dbar(1/" + vars.name(r.var);
    if (r.exp != 1) s += "^" + std::to_string(r.exp);
    s += ")";
  }
  if (t.opaque) {
    s += "^PM[" + t.opaque->label + "; bidegree (" + std::to_string(t.opaque->holo_deg) + "," +
         std::to_string(t.opaque->anti_deg) + "); support {";
    for (std::size_t i = 0; i < t.opaque->support.size(); ++i) {
      if (i) s += ",";
      s += vars.name(t.opaque->support[i]);
    }
    s += "}]";
  }
  return s;
}

std::string to_string(const CurrentSum& c, const VarTable& vars) {
  if (c.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c.terms().size(); ++i) {
    if (i) s += " + ";
    s += to_string(c.terms()[i], vars);
  }
  return s;
}

std::string to_string(const SuperMat<CurrentSum>& m, const VarTable& vars) {
  std::string s = "levels " + std::to_string(m.src) + "->" + std::to_string(m.tgt) + "\n";
  for (std::size_t r = 0; r < m.rows; ++r) {
    s += "[ ";
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) s += " | ";
      s += to_string(m.at(r, c), vars);
    }
    s += " ]\n";
  }
  return s;
}

} // namespace rescycle
