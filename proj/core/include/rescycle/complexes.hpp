#pragma once

#include <random>
#include <string>
#include <vector>

#include "rescycle/supermatrix.hpp"

namespace rescycle {

// Bounded complex of free modules with polynomial differentials:
//   0 -> E_len --phi_len--> ... --phi_2--> E_1 --phi_1--> E_0.
// Differentials are stored as degree-0 holomorphic Form matrices so they plug
// directly into the graded matrix calculus.
struct FreeComplex {
  int nvars = 0;
  std::vector<std::size_t> ranks;    // ranks[k] = rank of level k
  std::vector<SuperMat<Form>> diffs; // diffs[k-1] = phi_k

  int length() const { return static_cast<int>(diffs.size()); }
  const SuperMat<Form>& phi(int k) const { return diffs.at(static_cast<std::size_t>(k) - 1); }
  std::size_t rank(int k) const { return ranks.at(static_cast<std::size_t>(k)); }
};

// validates shapes, entry degrees (holomorphic, form degree 0) and
// phi_k phi_{k+1} = 0 exactly
FreeComplex make_complex(int nvars, std::vector<std::size_t> ranks,
                         std::vector<SuperMat<Form>> diffs);
// same shape checks, but admits broken differentials (negative controls)
FreeComplex make_complex_unchecked(int nvars, std::vector<std::size_t> ranks,
                                   std::vector<SuperMat<Form>> diffs);

// ascending k-subsets of {0..n-1} in lexicographic order; the basis order of
// exterior powers everywhere in this library
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// Koszul complex of a tuple f = (f_1..f_p):
//   delta(e_I) = sum_t (-1)^(t-1) f_{I_t} e_{I minus I_t}
FreeComplex koszul_complex(const std::vector<Poly>& f, int nvars);

// Minimal free resolution of a monomial ideal in two of the variables, from
// its staircase: gens must be minimal and sorted with strictly increasing
// exponents in the first variable and strictly decreasing in the second.
// Syzygy i has -x^(a_{i+1}-a_i) on row i and +y^(b_i-b_{i+1}) on row i+1.
FreeComplex staircase_resolution(const std::vector<Monomial>& gens, int nvars);

// entrywise holomorphic differential of a polynomial matrix
SuperMat<Form> dphi(const SuperMat<Form>& phi);

// {Dphi_1 ... Dphi_k} computed by iterated superalgebra composition
SuperMat<Form> dphi_product(const FreeComplex& E, int k);

struct ComplexCheck {
  bool ok = true;
  int level = -1;      // first failing level when !ok
  std::string message; // human-readable reason
};

// exact phi*phi = 0 plus a generic pointwise rank check
// rank E_k = rank phi_k + rank phi_{k+1} (k >= 1) and rank phi_1 = rank E_0,
// evaluated at a random rational point (retried a few times to dodge the
// exceptional set)
ComplexCheck verify_complex(const FreeComplex& E, std::uint64_t seed);

struct ChainMap {
  FreeComplex source; // (F, psi)
  FreeComplex target; // (E, phi)
  std::vector<SuperMat<Form>> maps; // maps[k] = a_k : F_k -> E_k
};

// phi_k a_k = a_{k-1} psi_k for all covered levels
bool chain_map_identity_holds(const ChainMap& cm);

// rank of a rational matrix (by Gaussian elimination)
std::size_t rational_rank(std::vector<std::vector<Rational>> m);

} // namespace rescycle
