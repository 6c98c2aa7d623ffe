#pragma once

#include "rescycle/complexes.hpp"
#include "rescycle/monomial_ideal.hpp"

namespace rescycle {

// Free-resolution data for O/J along a minimal prime W = V(S): the structure
// module A is spanned by the standard monomials of the localized ideal, the
// defining variables act through nilpotent 0/1 multiplication matrices, and K
// is the Koszul complex of (z_i * Id - M_i) over that basis. c is an explicit
// chain map into K from the Koszul complex L of the minimal pure powers
// z_i^beta_i contained in the localized ideal.
struct UniversalData {
  std::vector<int> support;          // S, ascending; p = |S|
  std::vector<Monomial> basis;       // standard monomials, degree-descending; m = |basis|
  std::vector<std::vector<std::vector<int>>> multmats; // 0/1 matrix per support variable
  std::vector<int> beta;             // beta[t] = minimal e with z_{S[t]}^e in the localized ideal
  FreeComplex K;                     // levels 0..p, rank m * C(p,k)
  FreeComplex L;                     // Koszul complex of the pure powers z^beta
  ChainMap c;                        // L -> K
};

UniversalData universal_resolution(const MonomialIdeal& J, const std::vector<int>& W);

// multiplication matrix of z^gamma on the basis (gamma indexed by support
// position); strictly upper triangular with zero diagonal for gamma != 0
std::vector<std::vector<int>> universal_mult_matrix(const UniversalData& u,
                                                    const std::vector<int>& gamma);

// \tilde B = sum_{gamma <= beta - 1} z^(beta - gamma - 1) M^gamma as a
// polynomial matrix at level p (an endomorphism of K_p = A)
SuperMat<Form> universal_bmatrix(const UniversalData& u);

} // namespace rescycle
