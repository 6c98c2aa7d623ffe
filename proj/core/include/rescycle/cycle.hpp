#pragma once

#include <map>
#include <string>
#include <vector>

#include "rescycle/scalar.hpp"
#include "rescycle/vars.hpp"

namespace rescycle {

// Formal linear combination of coordinate subspaces V(S), S a set of variable
// indices, with exact Scalar masses. Zero masses are dropped on insertion.
struct Cycle {
  std::map<std::vector<int>, Scalar> comps; // key: strictly ascending var ids

  void add(std::vector<int> vars, const Scalar& mass);
  bool is_zero() const { return comps.empty(); }

  friend Cycle operator+(const Cycle& a, const Cycle& b) {
    Cycle r = a;
    for (const auto& [k, v] : b.comps) r.add(k, v);
    return r;
  }
};

bool cycle_equal(const Cycle& a, const Cycle& b);

std::string to_string(const Cycle& c, const VarTable& vars);

} // namespace rescycle
