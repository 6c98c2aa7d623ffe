#include "rescycle/cycle.hpp"

#include <algorithm>
#include <sstream>

#include "rescycle/errors.hpp"

namespace rescycle {

void Cycle::add(std::vector<int> vars, const Scalar& mass) {
  if (mass.is_zero()) return;
  if (!std::is_sorted(vars.begin(), vars.end()) ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    fail(ErrKind::Internal, "cycle component variables must be strictly ascending");
  auto it = comps.find(vars);
  if (it == comps.end()) {
    comps.emplace(std::move(vars), mass);
  } else {
    it->second = it->second + mass;
    if (it->second.is_zero()) comps.erase(it);
  }
}

bool cycle_equal(const Cycle& a, const Cycle& b) { return a.comps == b.comps; }

std::string to_string(const Cycle& c, const VarTable& vars) {
  if (c.comps.empty()) return "0";
  // order components by codimension, then by variable indices
  std::vector<std::pair<std::vector<int>, Scalar>> items(c.comps.begin(), c.comps.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [vs, mass] : items) {
    if (!first) os << " + ";
    first = false;
    if (!(mass.rat == 1 && mass.tpi == 0)) os << to_string(mass) << "*";
    os << "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      os << vars.name(vs[i]) << "=";
    }
    os << "0]";
  }
  return os.str();
}

} // namespace rescycle
