#pragma once

#include <vector>

#include "rescycle/cycle.hpp"
#include "rescycle/poly.hpp"

namespace rescycle {

// Monomial ideal given by its (automatically minimalized) generators.
// This module is the combinatorial oracle: it never touches currents or
// complexes, so its answers are an independent cross-check for the engine.
class MonomialIdeal {
public:
  MonomialIdeal(int nvars, std::vector<Monomial> gens);
  static MonomialIdeal from_polys(int nvars, const std::vector<Poly>& gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;

  // set every variable outside `keep` to 1 and re-minimalize
  MonomialIdeal localized(const std::vector<int>& keep) const;

private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

// minimal coordinate primes = inclusion-minimal transversals of the
// generator-support hypergraph; each prime is an ascending list of var ids,
// output sorted by (codimension, lex)
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& J);

// number of standard monomials of the localization of J at the minimal prime
// P (geometric multiplicity of V(P) in the fundamental cycle)
long long multiplicity_along(const MonomialIdeal& J, const std::vector<int>& P);

// sum of mult * [V(P)] over the minimal primes
Cycle fundamental_cycle(const MonomialIdeal& J);

// length of (J : m^inf)/J for the maximal ideal m of all declared variables
// (supported for <= 3 variables); 0 exactly when J is saturated
long long length_along(const MonomialIdeal& J, const std::vector<int>& P);

} // namespace rescycle
