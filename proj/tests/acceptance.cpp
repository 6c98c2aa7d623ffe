// Acceptance gate. One line per published criterion; every comparison is
// exact symbolic equality (zero tolerance). Exit code 0 only if all pass.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rescycle/caseio.hpp"
#include "rescycle/engine.hpp"
#include "rescycle/errors.hpp"
#include "rescycle/lift.hpp"
#include "rescycle/parser.hpp"
#include "rescycle/universal.hpp"

using namespace rescycle;

namespace {

int failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& detail) {
  std::cout << "[" << idx << "] " << label << ": " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << "  -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

const VarTable V4({"x", "y", "z", "w"});
const VarTable XY({"x", "y"});
const VarTable XYZ({"x", "y", "z"});

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

SuperMat<CurrentSum> ch_column(const std::vector<std::pair<int, int>>& powers) {
  auto R = SuperMat<CurrentSum>::zero(0, static_cast<int>(powers.size()), 1, 1);
  R.at(0, 0) = ch_product(powers);
  return R;
}

Cycle one_plane(std::vector<int> vars, Rational mass, int tpi = 0) {
  Cycle c;
  c.add(std::move(vars), Scalar(std::move(mass), tpi));
  return c;
}

// ---------------------------------------------------------------- criterion 1
void criterion_ci_sweep() {
  bool ok = true;
  std::string detail;
  for (int p = 1; p <= 3 && ok; ++p) {
    int ncodes = 1;
    for (int i = 0; i < p; ++i) ncodes *= 4;
    for (int vc = 0; vc < ncodes && ok; ++vc) {
      std::vector<int> vars;
      int t = vc;
      bool dup = false;
      for (int i = 0; i < p; ++i) {
        int v = t % 4;
        t /= 4;
        for (int u : vars) dup |= (u == v);
        vars.push_back(v);
      }
      if (dup) continue;
      for (int ec = 0; ec < ncodes && ok; ++ec) {
        std::vector<int> exps;
        int s = ec;
        for (int i = 0; i < p; ++i) {
          exps.push_back(s % 4 + 1);
          s /= 4;
        }
        std::vector<Monomial> f;
        Rational mass = 1;
        for (int i = 0; i < p; ++i) {
          f.push_back(Monomial::var(vars[static_cast<std::size_t>(i)],
                                    exps[static_cast<std::size_t>(i)]));
          mass *= exps[static_cast<std::size_t>(i)];
        }
        std::vector<int> sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        Report r = verify_ci(f, V4);
        if (!r.match || !r.remainder.is_zero() ||
            !cycle_equal(r.computed, one_plane(sorted, mass))) {
          ok = false;
          std::ostringstream os;
          os << "tuple";
          for (int i = 0; i < p; ++i)
            os << " " << V4.name(vars[static_cast<std::size_t>(i)]) << "^"
               << exps[static_cast<std::size_t>(i)];
          os << " gave " << to_string(r.computed, V4);
          detail = os.str();
        }
      }
    }
  }
  report(1, "pure-power complete intersections, exhaustive sweep (p<=3, exps<=4, 4 vars)", ok,
         detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_mixed_example() {
  bool ok = true;
  std::string detail;
  try {
    Case c;
    c.vars = XYZ;
    c.ideal = MonomialIdeal(3, {Monomial::var(0) * Monomial::var(2),
                                Monomial::var(1) * Monomial::var(2)});
    c.mode = Mode::NonPure;
    Report r = verify_nonpure(c);
    Cycle expect;
    expect.add({2}, Scalar(Rational(1)));
    expect.add({0, 1}, Scalar(Rational(1)));
    bool notes_ok = false, notes_mu = false;
    for (const auto& n : r.notes) {
      if (n.find("dbar(1/z) = 0 holds") != std::string::npos) notes_ok = true;
      if (n.find("mu = 0 holds") != std::string::npos) notes_mu = true;
    }
    ok = r.match && r.remainder.is_zero() && cycle_equal(r.computed, expect) && notes_ok &&
         notes_mu;
    if (!ok) detail = "report: " + render_report_text(r);

    // the two restriction facts, recomputed directly
    if (ok && !restrict_to(res_current(2, 1), {{0, 1}}).is_zero()) {
      ok = false;
      detail = "1_{V(x,y)} dbar(1/z) did not vanish";
    }
    Poly D = Poly::variable(0) * Poly::barvariable(0) + Poly::variable(1) * Poly::barvariable(1);
    Form tau = Form::generator(FormKey{{0}, {}}, RatFun(Poly::barvariable(1), D * D)) +
               Form::generator(FormKey{{1}, {}}, RatFun(-Poly::barvariable(0), D * D));
    CurrentSum mu = current_mul(current_from_form(tau), res_current(2, 1));
    if (ok && !restrict_to(mu, {{0, 1}}).is_zero()) {
      ok = false;
      detail = "1_{V(x,y)} mu did not vanish";
    }
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }
  report(2, "mixed-codimension example (xz, yz): graded sum equals the cycle", ok, detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion_embedded_family() {
  bool ok = true;
  std::string detail;
  for (int k = 2; k <= 4 && ok; ++k)
    for (int m = 1; m < k && ok; ++m)
      for (int l = 1; l <= 3 && ok; ++l) {
        try {
          Report r = demo_embedded(k, l, m);
          MonomialIdeal J(2, {Monomial::var(1, k), Monomial::var(0, l) * Monomial::var(1, m)});
          bool coeff = cycle_equal(r.computed, one_plane({0, 1}, Rational(l * (2 * k - m)), 2));
          bool len = length_along(J, {0, 1}) == static_cast<long long>(l) * (k - m);
          Report u = verify_universal(J, {1}, XY);
          bool loc = u.match && cycle_equal(u.computed, one_plane({1}, Rational(m)));
          if (!(r.match && coeff && len && loc)) {
            ok = false;
            std::ostringstream os;
            os << "(k,l,m)=(" << k << "," << l << "," << m << ") coeff=" << coeff
               << " len=" << len << " loc=" << loc << " match=" << r.match;
            detail = os.str();
          }
        } catch (const Error& e) {
          ok = false;
          detail = e.what();
        }
      }
  report(3, "embedded family (y^k, x^l y^m): l(2k-m) mass, l(k-m) length, m[y=0] cycle", ok,
         detail);
}

// ---------------------------------------------------------------- criterion 4
long long standard_count(const MonomialIdeal& J, int bound) {
  long long n = 0;
  for (int a = 0; a < bound; ++a)
    for (int b = 0; b < bound; ++b)
      if (!J.contains(Monomial::var(0, a) * Monomial::var(1, b))) ++n;
  return n;
}

void criterion_staircase_comparison() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(20250815);
  std::uniform_int_distribution<int> ngen(2, 5), step(1, 2);

  auto run_one = [&](const std::vector<Monomial>& gens) {
    MonomialIdeal J(2, gens);
    FreeComplex E = staircase_resolution(gens, 2);
    int g = static_cast<int>(gens.size());
    std::vector<Monomial> f = {Monomial::var(0, gens[static_cast<std::size_t>(g) - 1].zdeg(0)),
                               Monomial::var(1, gens[0].zdeg(1))};
    Report r = verify_cm(J, E, f, XY);
    long long n = standard_count(J, 8);
    if (!r.match || !cycle_equal(r.computed, one_plane({0, 1}, Rational(n)))) {
      ok = false;
      std::ostringstream os;
      os << "ideal(";
      for (const auto& gen : gens) os << " " << Poly::monomial(gen, 1).to_string(XY);
      os << " ): expected " << n << "[0], got " << to_string(r.computed, XY)
         << (r.match ? "" : " (no match)");
      detail = os.str();
    }
  };

  // pinned anchor
  run_one({parse_monomial("y^3", XY), parse_monomial("x*y", XY), parse_monomial("x^2", XY)});

  for (int trial = 0; trial < 20 && ok; ++trial) {
    int g = ngen(rng);
    std::vector<int> a{0}, b{0};
    for (int i = 1; i < g; ++i) a.push_back(std::min(6, a.back() + step(rng)));
    for (int i = 1; i < g; ++i) b.push_back(std::min(6, b.back() + step(rng)));
    std::vector<Monomial> gens;
    for (int i = 0; i < g; ++i) {
      int ax = a[static_cast<std::size_t>(i)];
      int by = b[static_cast<std::size_t>(g - 1 - i)];
      gens.push_back(Monomial::var(0, ax) * Monomial::var(1, by));
    }
    // the construction can repeat exponents; keep only strict staircases
    bool strict = true;
    for (int i = 0; i + 1 < g; ++i)
      if (gens[static_cast<std::size_t>(i)].zdeg(0) >=
              gens[static_cast<std::size_t>(i) + 1].zdeg(0) ||
          gens[static_cast<std::size_t>(i)].zdeg(1) <=
              gens[static_cast<std::size_t>(i) + 1].zdeg(1))
        strict = false;
    if (!strict) {
      --trial;
      continue;
    }
    run_one(gens);
  }
  report(4, "staircase ideals: comparison route equals the standard-monomial count (20 random + anchor)",
         ok, detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_universal_trace() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> e(1, 3), c(1, 3);

  auto check_one = [&](const MonomialIdeal& J, const std::vector<int>& W) {
    const int p = static_cast<int>(W.size());
    UniversalData u = universal_resolution(J, W);
    const long long m = static_cast<long long>(u.basis.size());
    if (m > 6 || m != multiplicity_along(J, W)) {
      ok = false;
      detail = "local rank bound or oracle disagreement";
      return;
    }
    SuperMat<Form> B = plain_mul(dphi_product(u.K, p), universal_bmatrix(u));
    B.src = 0;
    B.tgt = 0;
    Form trB = super_trace(B);
    Monomial zb = Monomial::one();
    for (std::size_t t = 0; t < W.size(); ++t)
      if (u.beta[t] > 1) zb = zb * Monomial::var(W[t], u.beta[t] - 1);
    FormKey key;
    key.dzs = W;
    Form expected =
        Form::generator(key, RatFun(Poly::monomial(zb, Rational(factorial(p) * m))));
    if (!(trB == expected)) {
      ok = false;
      detail = "trace differs from p! m z^(beta-1) dz for a random ideal";
    }
  };

  // five hypersurface-component germs (p = 1)
  for (int i = 0; i < 5 && ok; ++i) {
    int s = e(rng), extra = e(rng), r = e(rng);
    MonomialIdeal J(2, {Monomial::var(1, s + extra),
                        Monomial::var(0, r) * Monomial::var(1, s)});
    check_one(J, {1});
  }
  // five artinian germs (p = 2) with small local rank
  int done = 0;
  while (done < 5 && ok) {
    int a = e(rng), b = e(rng), mid = c(rng);
    std::vector<Monomial> gens = {Monomial::var(1, b + 1),
                                  Monomial::var(0, std::min(a, mid)) * Monomial::var(1, 1),
                                  Monomial::var(0, a + mid)};
    MonomialIdeal J(2, gens);
    if (multiplicity_along(J, {0, 1}) > 6) continue;
    check_one(J, {0, 1});
    ++done;
  }
  report(5, "universal-resolution trace identity tr B = p! m z^(beta-1) dz (10 random germs)",
         ok, detail);
}

// ---------------------------------------------------------------- criterion 6
std::mt19937_64 prop_rng(0xace5u);

CurrentSum random_factor() {
  std::uniform_int_distribution<int> kind(0, 5), var(0, 3), exp(1, 3), cf(-3, 3);
  switch (kind(prop_rng)) {
    case 0: {
      Rational r(cf(prop_rng));
      if (r == 0) r = 1;
      return current_from_form(
          Form::scalar(RatFun(Poly::constant(r) * Poly::variable(var(prop_rng)).pow(exp(prop_rng) - 1))));
    }
    case 1: return current_from_form(Form::dz(var(prop_rng)));
    case 2: return current_from_form(Form::dzbar(var(prop_rng)));
    case 3: return pv_current(var(prop_rng), exp(prop_rng));
    case 4: return res_current(var(prop_rng), exp(prop_rng));
    default: return current_from_form(Form::scalar(RatFun(Poly::barvariable(var(prop_rng)))), 1);
  }
}

Form random_entry(int form_deg) {
  std::uniform_int_distribution<int> var(0, 2), exp(0, 2), coin(0, 1), cf(1, 4);
  Poly c = Poly::constant(Rational(cf(prop_rng))) * Poly::variable(var(prop_rng)).pow(exp(prop_rng));
  if (coin(prop_rng)) c = c * Poly::barvariable(var(prop_rng));
  Form f = Form::scalar(RatFun(c));
  std::set<std::pair<bool, int>> used;
  int placed = 0;
  while (placed < form_deg) {
    bool anti = coin(prop_rng);
    int v = var(prop_rng);
    if (!used.insert({anti, v}).second) continue;
    f = wedge(f, anti ? Form::dzbar(v) : Form::dz(v));
    ++placed;
  }
  return f;
}

void criterion_property_suites() {
  bool ok = true;
  std::string detail;
  auto fail_with = [&](const std::string& which) {
    if (ok) {
      ok = false;
      detail = which;
    }
  };

  // (a) the universal sign constant: the normalized Koszul trace of
  // (x_1^{b_1},...,x_p^{b_p}) carries mass p! (prod b) (2 pi i)^p for p <= 4
  {
    std::uniform_int_distribution<int> e(1, 3);
    for (int p = 1; p <= 4; ++p) {
      std::vector<Poly> fp;
      std::vector<std::pair<int, int>> powers;
      Rational mass = 1;
      std::vector<int> vars;
      for (int i = 0; i < p; ++i) {
        int b = e(prop_rng);
        fp.push_back(Poly::variable(i).pow(b));
        powers.emplace_back(i, b);
        mass *= b;
        vars.push_back(i);
      }
      FreeComplex E = koszul_complex(fp, 4);
      CurrentSum raw = super_trace(super_mul(dphi_product(E, p), ch_column(powers)));
      Normalized n = normalize_to_cycle(raw);
      Cycle expect = one_plane(vars, Rational(factorial(p)) * mass, p);
      if (!n.remainder.is_zero() || !cycle_equal(n.cycle, expect))
        fail_with("sign constant C_" + std::to_string(p));
    }
  }

  // (b) graded trace cyclicity with level signs
  {
    std::uniform_int_distribution<int> lev(0, 3), dim(1, 3), deg(0, 2);
    auto str_level = [](const SuperMat<Form>& b) {
      Form t = super_trace(b);
      return (b.src & 1) ? -t : t;
    };
    for (int trial = 0; trial < 60 && ok; ++trial) {
      int a = lev(prop_rng), b = lev(prop_rng);
      std::size_t ra = static_cast<std::size_t>(dim(prop_rng)),
                  rb = static_cast<std::size_t>(dim(prop_rng));
      int db = deg(prop_rng), dc = deg(prop_rng);
      auto B = SuperMat<Form>::zero(a, b, rb, ra);
      for (auto& x : B.entries) x = random_entry(db);
      auto C = SuperMat<Form>::zero(b, a, ra, rb);
      for (auto& x : C.entries) x = random_entry(dc);
      int pB = ((a + b) & 1) ^ (db & 1), pC = ((a + b) & 1) ^ (dc & 1);
      Form lhs = str_level(super_mul(B, C));
      Form rhs = str_level(super_mul(C, B));
      if (pB && pC) rhs = -rhs;
      if (!(lhs == rhs)) fail_with("graded trace cyclicity");
    }
  }

  // (c) the differentiated complex identity phi_l Dphi_{l+1} = Dphi_l phi_{l+1}
  {
    std::uniform_int_distribution<int> e(1, 3), nv(2, 3);
    for (int trial = 0; trial < 10 && ok; ++trial) {
      int p = nv(prop_rng);
      std::vector<Poly> fp;
      for (int i = 0; i < p; ++i)
        fp.push_back(Poly::variable(i).pow(e(prop_rng)) * Poly::variable((i + 1) % 3));
      FreeComplex E = koszul_complex(fp, 3);
      for (int l = 1; l < E.length(); ++l)
        if (!(super_mul(dphi(E.phi(l)), E.phi(l + 1)) ==
              super_mul(E.phi(l), dphi(E.phi(l + 1)))))
          fail_with("shift identity");
    }
  }

  // (d) duality: a monomial annihilates the factorized residue column exactly
  // when it lies in the pure-power ideal
  {
    std::uniform_int_distribution<int> e(1, 4), d(0, 5), pick(2, 3);
    for (int trial = 0; trial < 60 && ok; ++trial) {
      int p = pick(prop_rng);
      std::vector<std::pair<int, int>> powers;
      std::vector<Monomial> gens;
      for (int i = 0; i < p; ++i) {
        int b = e(prop_rng);
        powers.emplace_back(i, b);
        gens.push_back(Monomial::var(i, b));
      }
      MonomialIdeal J(4, gens);
      Monomial g = Monomial::one();
      for (int i = 0; i < 4; ++i) g = g * Monomial::var(i, d(prop_rng) % 5);
      CurrentSum prod = current_mul(
          current_from_form(Form::scalar(RatFun(Poly::monomial(g, 1)))), ch_product(powers));
      if (prod.is_zero() != J.contains(g)) fail_with("residue/ideal duality");
    }
  }

  // (e) d^2 = 0 and dbar^2 = 0
  {
    std::uniform_int_distribution<int> deg(0, 2);
    for (int trial = 0; trial < 40 && ok; ++trial) {
      Form f = random_entry(deg(prop_rng));
      auto [h, a] = exterior_d(f);
      auto dd = exterior_d(h + a);
      if (!(dd.first + dd.second).is_zero()) fail_with("d^2 = 0");
    }
    for (int trial = 0; trial < 40 && ok; ++trial) {
      try {
        CurrentSum cu = random_factor();
        for (int j = 0; j < 2; ++j) cu = current_mul(cu, random_factor());
        if (!dbar_current(dbar_current(cu)).is_zero()) fail_with("dbar^2 = 0");
      } catch (const Error&) {
      }
    }
  }

  // (f) rewriting confluence: association order cannot change a normal form
  {
    for (int trial = 0; trial < 60 && ok; ++trial) {
      CurrentSum a = random_factor(), b = random_factor(), cfac = random_factor();
      // when both association orders stay inside the fragment, the normal
      // forms must coincide
      bool lok = true, rok = true;
      CurrentSum l, r;
      try {
        l = current_mul(current_mul(a, b), cfac);
      } catch (const Error&) {
        lok = false;
      }
      try {
        r = current_mul(a, current_mul(b, cfac));
      } catch (const Error&) {
        rok = false;
      }
      if (lok && rok && !(l == r)) fail_with("rewriting confluence");
      bool dok = true, r1ok = true, r2ok = true;
      CurrentSum d, r1, r2;
      try {
        d = current_mul(a, b + cfac);
      } catch (const Error&) {
        dok = false;
      }
      try {
        r1 = current_mul(a, b);
      } catch (const Error&) {
        r1ok = false;
      }
      try {
        r2 = current_mul(a, cfac);
      } catch (const Error&) {
        r2ok = false;
      }
      if (dok && r1ok && r2ok && !(d == r1 + r2)) fail_with("distributivity");
    }
  }

  // (g) every lift that comes back is a chain map
  {
    std::uniform_int_distribution<int> step(1, 2);
    for (int trial = 0; trial < 8 && ok; ++trial) {
      int g = 3;
      std::vector<int> a{0}, b{0};
      for (int i = 1; i < g; ++i) a.push_back(a.back() + step(prop_rng));
      for (int i = 1; i < g; ++i) b.push_back(b.back() + step(prop_rng));
      std::vector<Monomial> gens;
      for (int i = 0; i < g; ++i)
        gens.push_back(Monomial::var(0, a[static_cast<std::size_t>(i)]) *
                       Monomial::var(1, b[static_cast<std::size_t>(g - 1 - i)]));
      FreeComplex E = staircase_resolution(gens, 2);
      FreeComplex F = koszul_complex({Poly::monomial(Monomial::var(0, a.back()), 1),
                                      Poly::monomial(Monomial::var(1, b.back()), 1)},
                                     2);
      auto a0 = SuperMat<Form>::zero(0, 0, 1, 1);
      a0.at(0, 0) = Form::one();
      try {
        ChainMap cm = lift_chain_map(F, E, a0);
        if (!chain_map_identity_holds(cm)) fail_with("lifted chain-map identity");
      } catch (const Error&) {
        fail_with("lift solvability on a staircase");
      }
    }
  }

  report(6, "property suites: signs, cyclicity, shift, duality, d/dbar, confluence, lifts", ok,
         detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion_negative_controls() {
  bool ok = true;
  std::string detail;

  // residue exponent perturbation inside an injected column
  try {
    std::string text = R"json({
      "variables": ["x", "y"],
      "ideal": ["x^2", "y^3"],
      "mode": "nonpure",
      "resolution": {"ranks": [1, 2, 1], "maps": [[["x^2", "y^3"]], [["-y^3"], ["x^2"]]]},
      "currents": [["0", "0"], ["res(1/y^3)^res(1/x^2)"]]
    })json";
    Report good = run_case(parse_case_text(text, "control"));
    std::string bad = text;
    bad.replace(bad.find("res(1/x^2)"), std::string("res(1/x^2)").size(), "res(1/x^3)");
    Report broken = run_case(parse_case_text(bad, "control-bad"));
    if (!good.match || broken.match) {
      ok = false;
      detail = "residue exponent perturbation did not flip the verdict";
    }
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }

  // differential entry perturbation
  if (ok) {
    auto phi1 = SuperMat<Form>::zero(1, 0, 1, 3);
    phi1.at(0, 0) = Form::scalar(RatFun(parse_poly("y^3", XY)));
    phi1.at(0, 1) = Form::scalar(RatFun(parse_poly("x*y", XY)));
    phi1.at(0, 2) = Form::scalar(RatFun(parse_poly("x^2", XY)));
    auto phi2 = SuperMat<Form>::zero(2, 1, 3, 2);
    phi2.at(0, 0) = Form::scalar(RatFun(parse_poly("-2*x", XY)));
    phi2.at(1, 0) = Form::scalar(RatFun(parse_poly("y^2", XY)));
    phi2.at(1, 1) = Form::scalar(RatFun(parse_poly("-x", XY)));
    phi2.at(2, 1) = Form::scalar(RatFun(parse_poly("y", XY)));
    FreeComplex broken = make_complex_unchecked(2, {1, 3, 2}, {phi1, phi2});
    MonomialIdeal J(2, {parse_monomial("x^2", XY), parse_monomial("x*y", XY),
                        parse_monomial("y^3", XY)});
    bool flipped = false;
    try {
      Report r = verify_cm(J, broken, {parse_monomial("x^2", XY), parse_monomial("y^3", XY)}, XY);
      flipped = !r.match;
    } catch (const Error&) {
      flipped = true;
    }
    if (!flipped) {
      ok = false;
      detail = "differential perturbation did not flip the verdict";
    }
  }

  // oracle multiplicity perturbation
  if (ok) {
    Report r = verify_ci({parse_monomial("x^2", XY), parse_monomial("y^3", XY)}, XY);
    Cycle wrong = r.oracle;
    wrong.add({0, 1}, Scalar(Rational(1)));
    if (!r.match || cycle_equal(r.computed, wrong)) {
      ok = false;
      detail = "oracle mass perturbation did not flip the verdict";
    }
  }

  report(7, "negative controls: single-entry perturbations flip PASS to FAIL", ok, detail);
}

} // namespace

int main() {
  criterion_ci_sweep();
  criterion_mixed_example();
  criterion_embedded_family();
  criterion_staircase_comparison();
  criterion_universal_trace();
  criterion_property_suites();
  criterion_negative_controls();
  if (failures == 0)
    std::cout << "all acceptance criteria hold" << std::endl;
  else
    std::cout << failures << " criterion(s) failing" << std::endl;
  return failures == 0 ? 0 : 1;
}
