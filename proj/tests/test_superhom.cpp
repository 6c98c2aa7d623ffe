// graded matrix calculus, complexes, and chain-map lifting
#include <doctest.h>

#include <random>

#include "rescycle/complexes.hpp"
#include "rescycle/errors.hpp"
#include "rescycle/lift.hpp"
#include "rescycle/parser.hpp"

using namespace rescycle;

namespace {

const VarTable XYZ({"x", "y", "z"});

SuperMat<Form> mat(int src, int tgt, std::size_t rows, std::size_t cols,
                   const std::vector<std::string>& entries, const VarTable& v = XYZ) {
  auto m = SuperMat<Form>::zero(src, tgt, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.entries[i] = Form::scalar(RatFun(parse_poly(entries[i], v)));
  return m;
}

// supertrace over the total module: blocks at level (k,k) enter with (-1)^k
Form str_level(const SuperMat<Form>& block) {
  Form t = super_trace(block);
  return (block.src & 1) ? -t : t;
}

std::mt19937_64 rng(0x5eedu);

Form random_entry(int form_deg, int nvars) {
  std::uniform_int_distribution<int> var(0, nvars - 1), exp(0, 2), coin(0, 1);
  Poly c = Poly::constant(Rational(1 + exp(rng)));
  c = c * Poly::variable(var(rng)).pow(exp(rng));
  if (coin(rng)) c = c * Poly::barvariable(var(rng));
  Form f = Form::scalar(RatFun(c));
  std::set<std::pair<bool, int>> used;
  int placed = 0;
  while (placed < form_deg) {
    bool anti = coin(rng);
    int v = var(rng);
    if (!used.insert({anti, v}).second) continue;
    f = wedge(f, anti ? Form::dzbar(v) : Form::dz(v));
    ++placed;
  }
  return f;
}

SuperMat<Form> random_mat(int src, int tgt, std::size_t rows, std::size_t cols, int form_deg,
                          int nvars) {
  auto m = SuperMat<Form>::zero(src, tgt, rows, cols);
  for (auto& e : m.entries) e = random_entry(form_deg, nvars);
  return m;
}

} // namespace

TEST_CASE("graded composition levels and signs") {
  auto beta = mat(1, 0, 1, 1, {"x"});
  auto gamma = mat(0, 1, 1, 1, {"y"});
  auto bg = super_mul(beta, gamma);
  CHECK(bg.src == 0);
  CHECK(bg.tgt == 0);
  CHECK(bg.at(0, 0) == Form::scalar(RatFun(parse_poly("x*y", XYZ))));

  // an odd-level map crossing an odd form flips the sign
  auto dxmat = SuperMat<Form>::zero(1, 0, 1, 1);
  dxmat.at(0, 0) = Form::dz(0);
  auto dymat = SuperMat<Form>::zero(0, 1, 1, 1);
  dymat.at(0, 0) = Form::dz(1);
  CHECK(super_mul(dxmat, dymat).at(0, 0) == -wedge(Form::dz(0), Form::dz(1)));
  CHECK(super_mul(dymat, dxmat).at(0, 0) == wedge(Form::dz(0), Form::dz(1)));

  CHECK_THROWS_AS(super_mul(beta, beta), Error); // level mismatch
  CHECK(plain_mul(dxmat, dymat).at(0, 0) == wedge(Form::dz(0), Form::dz(1)));
}

TEST_CASE("graded trace cyclicity") {
  // str(BC) = (-1)^{|B||C|} str(CB) with |X| = endomorphism parity + form parity,
  // where the trace of a level-(k,k) block carries the sign (-1)^k
  std::uniform_int_distribution<int> lev(0, 3), dim(1, 3), deg(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    int a = lev(rng), b = lev(rng);
    std::size_t ra = static_cast<std::size_t>(dim(rng)), rb = static_cast<std::size_t>(dim(rng));
    int db = deg(rng), dc = deg(rng);
    auto B = random_mat(a, b, rb, ra, db, 3);
    auto C = random_mat(b, a, ra, rb, dc, 3);
    int pB = ((a + b) & 1) ^ (db & 1);
    int pC = ((a + b) & 1) ^ (dc & 1);
    Form lhs = str_level(super_mul(B, C));
    Form rhs = str_level(super_mul(C, B));
    if (pB && pC) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("koszul complexes are complexes") {
  auto f = std::vector<Poly>{parse_poly("x^2", XYZ), parse_poly("y^3", XYZ),
                             parse_poly("z", XYZ)};
  FreeComplex E = koszul_complex(f, 3);
  CHECK(E.length() == 3);
  CHECK(E.rank(0) == 1);
  CHECK(E.rank(1) == 3);
  CHECK(E.rank(2) == 3);
  CHECK(E.rank(3) == 1);
  for (std::uint64_t s : {1u, 2u, 99u}) CHECK(verify_complex(E, s).ok);
}

TEST_CASE("shift identity through the differential") {
  // phi_l Dphi_{l+1} = Dphi_l phi_{l+1}, the derivative of phi phi = 0
  std::vector<FreeComplex> cases;
  cases.push_back(koszul_complex({parse_poly("x^2", XYZ), parse_poly("y^3", XYZ)}, 3));
  cases.push_back(koszul_complex(
      {parse_poly("x*y", XYZ), parse_poly("y*z", XYZ), parse_poly("x^2*z", XYZ)}, 3));
  cases.push_back(staircase_resolution(
      {parse_monomial("y^3", XYZ), parse_monomial("x*y", XYZ), parse_monomial("x^2", XYZ)}, 3));
  for (const auto& E : cases)
    for (int l = 1; l < E.length(); ++l)
      CHECK(super_mul(dphi(E.phi(l)), E.phi(l + 1)) == super_mul(E.phi(l), dphi(E.phi(l + 1))));
}

TEST_CASE("staircase resolutions") {
  auto gens = std::vector<Monomial>{parse_monomial("y^3", XYZ), parse_monomial("x*y", XYZ),
                                    parse_monomial("x^2", XYZ)};
  FreeComplex E = staircase_resolution(gens, 3);
  CHECK(E.length() == 2);
  CHECK(E.rank(1) == 3);
  CHECK(E.rank(2) == 2);
  CHECK(verify_complex(E, 7).ok);
  // wrong sort order is rejected
  CHECK_THROWS_AS(staircase_resolution({parse_monomial("x^2", XYZ), parse_monomial("y^3", XYZ),
                                        parse_monomial("x*y", XYZ)},
                                       3),
                  Error);
}

TEST_CASE("broken differentials are caught") {
  auto phi1 = mat(1, 0, 1, 2, {"x", "y"});
  auto phi2 = mat(2, 1, 2, 1, {"-y", "x"});
  CHECK_NOTHROW(make_complex(3, {1, 2, 1}, {phi1, phi2}));
  auto bad = mat(2, 1, 2, 1, {"-y", "y"});
  CHECK_THROWS_AS(make_complex(3, {1, 2, 1}, {phi1, bad}), Error);
  FreeComplex forced = make_complex_unchecked(3, {1, 2, 1}, {phi1, bad});
  CHECK_FALSE(verify_complex(forced, 3).ok);
}

TEST_CASE("chain map lifting") {
  VarTable XY({"x", "y"});
  auto J = std::vector<Monomial>{parse_monomial("x^2", XY), parse_monomial("x*y", XY),
                                 parse_monomial("y^3", XY)};
  std::vector<Monomial> sorted = {J[0], J[1], J[2]};
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial& a, const Monomial& b) { return a.zdeg(0) < b.zdeg(0); });
  FreeComplex E = staircase_resolution(sorted, 2);
  FreeComplex F = koszul_complex({parse_poly("x^2", XY), parse_poly("y^3", XY)}, 2);

  auto a0 = SuperMat<Form>::zero(0, 0, 1, 1);
  a0.at(0, 0) = Form::one();
  ChainMap a = lift_chain_map(F, E, a0);
  REQUIRE(a.maps.size() == 3);
  CHECK(chain_map_identity_holds(a));

  // an explicit degree bound that is too small fails loudly
  CHECK_THROWS_AS(lift_chain_map(F, E, a0, 0), Error);
}

TEST_CASE("lift respects a scaled start") {
  VarTable XY({"x", "y"});
  FreeComplex E = staircase_resolution(
      {parse_monomial("y^2", XY), parse_monomial("x*y", XY), parse_monomial("x^3", XY)}, 2);
  FreeComplex F = koszul_complex({parse_poly("x^3", XY), parse_poly("y^2", XY)}, 2);
  auto a0 = SuperMat<Form>::zero(0, 0, 1, 1);
  a0.at(0, 0) = Form::scalar(RatFun(parse_poly("x*y", XY)));
  ChainMap a = lift_chain_map(F, E, a0);
  CHECK(chain_map_identity_holds(a));
}
