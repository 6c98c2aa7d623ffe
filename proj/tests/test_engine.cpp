// verification pipelines against the combinatorial oracle
#include <doctest.h>

#include "rescycle/caseio.hpp"
#include "rescycle/engine.hpp"
#include "rescycle/errors.hpp"
#include "rescycle/parser.hpp"

using namespace rescycle;

namespace {

const VarTable XY({"x", "y"});
const VarTable XYZ({"x", "y", "z"});

std::vector<Monomial> mons(const std::vector<std::string>& ss, const VarTable& v) {
  std::vector<Monomial> out;
  for (const auto& s : ss) out.push_back(parse_monomial(s, v));
  return out;
}

Cycle point_mass(long long m, int tpi = 0) {
  Cycle c;
  c.add({0, 1}, Scalar(Rational(m), tpi));
  return c;
}

bool has_note(const Report& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("complete intersections of pure powers") {
  Report r1 = verify_ci(mons({"x"}, XY), XY);
  CHECK(r1.match);
  Cycle e1;
  e1.add({0}, Scalar(Rational(1)));
  CHECK(cycle_equal(r1.computed, e1));

  Report r2 = verify_ci(mons({"x^2", "y^3"}, XY), XY);
  CHECK(r2.match);
  CHECK(cycle_equal(r2.computed, point_mass(6)));
  CHECK(r2.remainder.is_zero());

  // tuple order does not change the cycle
  Report r2b = verify_ci(mons({"y^3", "x^2"}, XY), XY);
  CHECK(r2b.match);
  CHECK(cycle_equal(r2b.computed, r2.computed));

  Report r3 = verify_ci(mons({"x^2", "y^3", "z"}, XYZ), XYZ);
  CHECK(r3.match);
  Cycle e3;
  e3.add({0, 1, 2}, Scalar(Rational(6)));
  CHECK(cycle_equal(r3.computed, e3));

  CHECK_THROWS_AS(verify_ci(mons({"x*y"}, XY), XY), Error);
  CHECK_THROWS_AS(verify_ci(mons({"x", "x^2"}, XY), XY), Error);
}

TEST_CASE("comparison route through the staircase anchor") {
  MonomialIdeal J(2, mons({"x^2", "x*y", "y^3"}, XY));
  FreeComplex E = staircase_resolution(mons({"y^3", "x*y", "x^2"}, XY), 2);
  Report r = verify_cm(J, E, mons({"x^2", "y^3"}, XY), XY);
  CHECK(r.match);
  CHECK(cycle_equal(r.computed, point_mass(4)));
  CHECK(r.remainder.is_zero());
  CHECK(has_note(r, "dimension principle"));
}

TEST_CASE("comparison route is resolution independent") {
  MonomialIdeal J(2, mons({"x^2", "x*y", "y^3"}, XY));
  auto f = mons({"x^2", "y^3"}, XY);

  FreeComplex E1 = staircase_resolution(mons({"y^3", "x*y", "x^2"}, XY), 2);
  // pad with a trivial summand: same module, different frames
  auto phi1 = SuperMat<Form>::zero(1, 0, 1, 4);
  phi1.at(0, 0) = Form::scalar(RatFun(parse_poly("x^2", XY)));
  phi1.at(0, 1) = Form::scalar(RatFun(parse_poly("x*y", XY)));
  phi1.at(0, 2) = Form::scalar(RatFun(parse_poly("y^3", XY)));
  auto phi2 = SuperMat<Form>::zero(2, 1, 4, 3);
  phi2.at(0, 0) = Form::scalar(RatFun(parse_poly("-y", XY)));
  phi2.at(1, 0) = Form::scalar(RatFun(parse_poly("x", XY)));
  phi2.at(1, 1) = Form::scalar(RatFun(parse_poly("-y^2", XY)));
  phi2.at(2, 1) = Form::scalar(RatFun(parse_poly("x", XY)));
  phi2.at(3, 2) = Form::one();
  FreeComplex E2 = make_complex(2, {1, 4, 3}, {phi1, phi2});

  Report r1 = verify_cm(J, E1, f, XY);
  Report r2 = verify_cm(J, E2, f, XY);
  CHECK(r1.match);
  CHECK(r2.match);
  CHECK(cycle_equal(r1.computed, r2.computed));
}

TEST_CASE("route independence on a pure-power intersection") {
  auto f = mons({"x^2", "y^3"}, XY);
  MonomialIdeal J(2, f);
  Report ci = verify_ci(f, XY);
  Report cm = verify_cm(J, koszul_complex({parse_poly("x^2", XY), parse_poly("y^3", XY)}, 2), f,
                        XY);
  Report un = verify_universal(J, {0, 1}, XY);
  CHECK(ci.match);
  CHECK(cm.match);
  CHECK(un.match);
  CHECK(cycle_equal(ci.computed, cm.computed));
  CHECK(cycle_equal(ci.computed, un.computed));
}

TEST_CASE("comparison route rejections") {
  MonomialIdeal J(2, mons({"x^2", "x*y", "y^3"}, XY));
  FreeComplex E = staircase_resolution(mons({"y^3", "x*y", "x^2"}, XY), 2);
  // tuple not inside the ideal
  CHECK_THROWS_AS(verify_cm(J, E, mons({"x", "y^3"}, XY), XY), Error);
  // not pure powers
  CHECK_THROWS_AS(verify_cm(J, E, mons({"x*y", "y^3"}, XY), XY), Error);
  // length vs codimension mismatch: (xz, yz) has components of unequal codim
  MonomialIdeal Jz(3, mons({"x*z", "y*z"}, XYZ));
  FreeComplex Ez = koszul_complex({parse_poly("x*z", XYZ), parse_poly("y*z", XYZ)}, 3);
  CHECK_THROWS_AS(verify_cm(Jz, Ez, mons({"x^2", "y^2"}, XYZ), XYZ), Error);
}

TEST_CASE("universal route on localized germs") {
  // p = 1 at a hypersurface component with an embedded point behind it
  MonomialIdeal J(2, mons({"y^3", "x*y^2"}, XY));
  Report r = verify_universal(J, {1}, XY);
  CHECK(r.match);
  Cycle expect;
  expect.add({1}, Scalar(Rational(2)));
  CHECK(cycle_equal(r.computed, expect));
  CHECK(has_note(r, "trace identity holds"));

  // p = 2 artinian germ
  MonomialIdeal J2(2, mons({"x^2", "x*y", "y^3"}, XY));
  Report r2 = verify_universal(J2, {0, 1}, XY);
  CHECK(r2.match);
  CHECK(cycle_equal(r2.computed, point_mass(4)));

  // mixed-codimension ideal, one component at a time
  MonomialIdeal Jz(3, mons({"x*z", "y*z"}, XYZ));
  Report rz = verify_universal(Jz, {2}, XYZ);
  CHECK(rz.match);
  Report rxy = verify_universal(Jz, {0, 1}, XYZ);
  CHECK(rxy.match);

  // not a minimal prime
  CHECK_THROWS_AS(verify_universal(J, {0}, XY), Error);
}

TEST_CASE("mixed codimensions with the built-in column") {
  Case c;
  c.vars = XYZ;
  c.ideal = MonomialIdeal(3, mons({"x*z", "y*z"}, XYZ));
  c.mode = Mode::NonPure;
  Report r = verify_nonpure(c);
  CHECK(r.match);
  Cycle expect;
  expect.add({2}, Scalar(Rational(1)));
  expect.add({0, 1}, Scalar(Rational(1)));
  CHECK(cycle_equal(r.computed, expect));
  CHECK(has_note(r, "1_{V(x,y)} dbar(1/z) = 0 holds"));
  CHECK(has_note(r, "1_{V(x,y)} mu = 0 holds"));
  CHECK(r.remainder.is_zero());
}

TEST_CASE("mixed mode reduces to the top level on a pure intersection") {
  // inject the factorized column for the Koszul complex of (x^2, y^3)
  std::string text = R"json({
    "variables": ["x", "y"],
    "ideal": ["x^2", "y^3"],
    "mode": "nonpure",
    "resolution": {
      "ranks": [1, 2, 1],
      "maps": [[["x^2", "y^3"]], [["-y^3"], ["x^2"]]]
    },
    "currents": [["0", "0"], ["res(1/y^3)^res(1/x^2)"]]
  })json";
  Case c = parse_case_text(text, "injected");
  Report r = run_case(c);
  CHECK(r.match);
  CHECK(cycle_equal(r.computed, point_mass(6)));

  // a wrong residue exponent in the injected column must surface as a mismatch
  std::string bad = text;
  bad.replace(bad.find("res(1/x^2)"), std::string("res(1/x^2)").size(), "res(1/x^3)");
  Report rb = run_case(parse_case_text(bad, "injected-bad"));
  CHECK_FALSE(rb.match);
}

TEST_CASE("embedded demo family") {
  Report r = demo_embedded(3, 2, 1);
  CHECK(r.match);
  CHECK(cycle_equal(r.computed, point_mass(10, 2))); // l(2k-m) = 2*5
  CHECK(has_note(r, "l(k-m) = 4"));
  CHECK(has_note(r, "lift independence of the top current: holds"));

  Report r2 = demo_embedded(2, 1, 1);
  CHECK(r2.match);
  CHECK(cycle_equal(r2.computed, point_mass(3, 2)));
  CHECK(has_note(r2, "l(k-m) = 1"));

  CHECK_THROWS_AS(demo_embedded(2, 1, 2), Error); // m >= k
  CHECK_THROWS_AS(demo_embedded(3, 0, 1), Error);
  CHECK_THROWS_AS(demo_embedded(3, 1, 0), Error);
}

TEST_CASE("case dispatch") {
  // auto on pure powers goes through the Koszul route
  Case a;
  a.vars = XY;
  a.ideal = MonomialIdeal(2, mons({"x^2", "y^3"}, XY));
  Report ra = run_case(a);
  CHECK(ra.match);
  CHECK(cycle_equal(ra.computed, point_mass(6)));

  // auto on anything else sums the per-component localized routes
  Case b;
  b.vars = XYZ;
  b.ideal = MonomialIdeal(3, mons({"x*z", "y*z"}, XYZ));
  Report rb = run_case(b);
  CHECK(rb.match);
  Cycle expect;
  expect.add({2}, Scalar(Rational(1)));
  expect.add({0, 1}, Scalar(Rational(1)));
  CHECK(cycle_equal(rb.computed, expect));

  // declared CI tuple must generate the ideal
  Case c;
  c.vars = XY;
  c.ideal = MonomialIdeal(2, mons({"x^2", "y^3"}, XY));
  c.mode = Mode::CI;
  c.ci_tuple = mons({"x^2", "y^2"}, XY);
  CHECK_THROWS_AS(run_case(c), Error);
}

TEST_CASE("negative controls flip the comparison") {
  // perturbed differential: not a resolution of J any more
  auto phi1 = SuperMat<Form>::zero(1, 0, 1, 3);
  phi1.at(0, 0) = Form::scalar(RatFun(parse_poly("y^3", XY)));
  phi1.at(0, 1) = Form::scalar(RatFun(parse_poly("x*y", XY)));
  phi1.at(0, 2) = Form::scalar(RatFun(parse_poly("x^2", XY)));
  auto phi2 = SuperMat<Form>::zero(2, 1, 3, 2);
  phi2.at(0, 0) = Form::scalar(RatFun(parse_poly("-2*x", XY))); // should be -x
  phi2.at(1, 0) = Form::scalar(RatFun(parse_poly("y^2", XY)));
  phi2.at(1, 1) = Form::scalar(RatFun(parse_poly("-x", XY)));
  phi2.at(2, 1) = Form::scalar(RatFun(parse_poly("y", XY)));
  FreeComplex broken = make_complex_unchecked(2, {1, 3, 2}, {phi1, phi2});
  MonomialIdeal J(2, mons({"x^2", "x*y", "y^3"}, XY));
  bool flipped = false;
  try {
    Report r = verify_cm(J, broken, mons({"x^2", "y^3"}, XY), XY);
    flipped = !r.match;
  } catch (const Error&) {
    flipped = true; // the lift has no solution against a broken complex
  }
  CHECK(flipped);

  // perturbed oracle multiplicity can never match the computed cycle
  Report good = verify_ci(mons({"x^2", "y^3"}, XY), XY);
  REQUIRE(good.match);
  Cycle wrong = good.oracle;
  wrong.add({0, 1}, Scalar(Rational(1)));
  CHECK_FALSE(cycle_equal(good.computed, wrong));
}

TEST_CASE("report serialization round trips") {
  std::string text = R"({"variables":["x","y","z"],"ideal":["x*z","y*z"],"mode":"nonpure"})";
  Case c = parse_case_text(text, "roundtrip");
  Report r = run_case(c);
  REQUIRE(r.match);
  std::string structured = render_report_structured(c, r);
  Case c2 = parse_case_text(structured, "roundtrip-2");
  CHECK(c2.vars.names() == c.vars.names());
  CHECK(c2.ideal.gens() == c.ideal.gens());
  CHECK(c2.mode == c.mode);
  Report r2 = run_case(c2);
  CHECK(r2.match);
  CHECK(cycle_equal(r2.computed, r.computed));

  std::string textout = render_report_text(r);
  CHECK(textout.find("computed: [z=0] + [x=y=0]; oracle: [z=0] + [x=y=0]; PASS") !=
        std::string::npos);
}

TEST_CASE("case schema is strict") {
  CHECK_THROWS_AS(parse_case_text(R"({"ideal":["x"]})", "t"), Error);
  CHECK_THROWS_AS(parse_case_text(R"({"variables":["x"],"ideal":["x"],"extra":1})", "t"), Error);
  CHECK_THROWS_AS(parse_case_text(R"({"variables":["x"],"ideal":["x+1"]})", "t"), Error);
  CHECK_THROWS_AS(parse_case_text(R"({"variables":["x"],"ideal":["x"],"mode":"?"})", "t"), Error);
  CHECK_THROWS_AS(parse_case_text("not json", "t"), Error);
  CHECK_THROWS_AS(
      parse_case_text(R"({"variables":["x"],"ideal":["x"],"options":{"zeed":1}})", "t"), Error);
  CHECK_NOTHROW(parse_case_text(
      R"({"variables":["x"],"ideal":["x"],"options":{"lift_bound":3,"seed":9}})", "t"));
}
