// combinatorial oracle: minimal primes, multiplicities, fundamental cycles
#include <doctest.h>

#include <random>

#include "rescycle/monomial_ideal.hpp"
#include "rescycle/parser.hpp"

using namespace rescycle;

namespace {

const VarTable XYZ({"x", "y", "z"});
const VarTable XY({"x", "y"});

MonomialIdeal ideal(const std::vector<std::string>& gens, const VarTable& v) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(parse_monomial(g, v));
  return MonomialIdeal(v.size(), std::move(ms));
}

// brute-force count of monomials outside J inside the bounding box
long long standard_monomials_2d(const MonomialIdeal& J, int bound) {
  long long n = 0;
  for (int a = 0; a < bound; ++a)
    for (int b = 0; b < bound; ++b)
      if (!J.contains(Monomial::var(0, a) * Monomial::var(1, b))) ++n;
  return n;
}

} // namespace

TEST_CASE("generators are minimalized") {
  MonomialIdeal J = ideal({"x^2", "x^3", "x^2*y"}, XY);
  CHECK(J.gens().size() == 1);
  CHECK(J.gens()[0] == parse_monomial("x^2", XY));
  CHECK(J.contains(parse_monomial("x^5*y", XY)));
  CHECK_FALSE(J.contains(parse_monomial("x*y^4", XY)));
  CHECK(ideal({"1"}, XY).is_unit());
  CHECK(MonomialIdeal(2, {}).is_zero());
}

TEST_CASE("localization") {
  MonomialIdeal J = ideal({"x*z", "y*z"}, XYZ);
  MonomialIdeal at_z = J.localized({2});
  CHECK(at_z.gens().size() == 1);
  CHECK(at_z.gens()[0] == parse_monomial("z", XYZ));
  MonomialIdeal at_xy = J.localized({0, 1});
  CHECK(at_xy.gens().size() == 2);
}

TEST_CASE("minimal primes are sorted by codimension") {
  auto primes = minimal_primes(ideal({"x*z", "y*z"}, XYZ));
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == std::vector<int>{2});
  CHECK(primes[1] == std::vector<int>{0, 1});

  auto single = minimal_primes(ideal({"x^2", "x*y", "y^3"}, XY));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == std::vector<int>{0, 1});

  // an embedded point does not show up
  auto emb = minimal_primes(ideal({"y^3", "x^2*y"}, XY));
  REQUIRE(emb.size() == 1);
  CHECK(emb[0] == std::vector<int>{1});
}

TEST_CASE("multiplicities on the worked examples") {
  CHECK(multiplicity_along(ideal({"x^2", "y^3"}, XY), {0, 1}) == 6);
  CHECK(multiplicity_along(ideal({"x^2", "x*y", "y^3"}, XY), {0, 1}) == 4);
  CHECK(multiplicity_along(ideal({"x*z", "y*z"}, XYZ), {2}) == 1);
  CHECK(multiplicity_along(ideal({"x*z", "y*z"}, XYZ), {0, 1}) == 1);
  CHECK(multiplicity_along(ideal({"y^3", "x^2*y"}, XY), {1}) == 1);
  CHECK(multiplicity_along(ideal({"y^3", "x*y^2"}, XY), {1}) == 2);
}

TEST_CASE("fundamental cycles") {
  Cycle c = fundamental_cycle(ideal({"x*z", "y*z"}, XYZ));
  Cycle expect;
  expect.add({2}, Scalar(Rational(1)));
  expect.add({0, 1}, Scalar(Rational(1)));
  CHECK(cycle_equal(c, expect));

  Cycle c2 = fundamental_cycle(ideal({"x^2", "x*y", "y^3"}, XY));
  Cycle e2;
  e2.add({0, 1}, Scalar(Rational(4)));
  CHECK(cycle_equal(c2, e2));

  // embedded structure is invisible to the cycle
  Cycle c3 = fundamental_cycle(ideal({"y^3", "x^2*y"}, XY));
  Cycle e3;
  e3.add({1}, Scalar(Rational(1)));
  CHECK(cycle_equal(c3, e3));
}

TEST_CASE("artinian multiplicity equals the staircase count") {
  std::mt19937_64 rng(12);
  // g >= 2 keeps the ideal proper: the first generator is a pure y power and
  // the last a pure x power
  std::uniform_int_distribution<int> ng(2, 4), step(1, 2);
  for (int trial = 0; trial < 25; ++trial) {
    int g = ng(rng);
    std::vector<int> a{0}, b;
    for (int i = 1; i < g; ++i) a.push_back(std::min(6, a.back() + step(rng)));
    b.resize(static_cast<std::size_t>(g));
    b[static_cast<std::size_t>(g) - 1] = 0;
    for (int i = g - 2; i >= 0; --i) b[static_cast<std::size_t>(i)] = std::min(6, b[i + 1] + step(rng));
    std::vector<Monomial> gens;
    for (int i = 0; i < g; ++i) gens.push_back(Monomial::var(0, a[i]) * Monomial::var(1, b[i]));
    MonomialIdeal J(2, gens);
    CHECK(multiplicity_along(J, {0, 1}) == standard_monomials_2d(J, 16));
  }
}

TEST_CASE("saturation lengths") {
  CHECK(length_along(ideal({"x^2", "x*y"}, XY), {0, 1}) == 1);
  CHECK(length_along(ideal({"y^3", "x^2*y"}, XY), {0, 1}) == 4);  // the l(k-m) family at (3,2,1)
  CHECK(length_along(ideal({"x^2", "y^3"}, XY), {0, 1}) == 6);    // artinian: saturation is everything
  CHECK(length_along(ideal({"x"}, XY), {0, 1}) == 0);             // principal primes are saturated
}
