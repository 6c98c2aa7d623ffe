#pragma once

#include <optional>
#include <vector>

#include "rescycle/complexes.hpp"

namespace rescycle {

// All monomials in z_0..z_{nvars-1} of total degree <= d (holomorphic only).
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

// Lift a0 : F_0 -> E_0 to a chain map a : F -> E, solving
//   phi^E_k a_k = a_{k-1} phi^F_k
// level by level with polynomial-entry ansatz of bounded degree (linear
// algebra over Q, free coefficients set to zero).  Without an explicit
// degree_bound the bound starts at a size heuristic and doubles a few times
// before giving up.  Throws ErrKind::Lift when no lift exists within the
// bound.
ChainMap lift_chain_map(const FreeComplex& F, const FreeComplex& E, const SuperMat<Form>& a0,
                        std::optional<int> degree_bound = std::nullopt);

} // namespace rescycle
