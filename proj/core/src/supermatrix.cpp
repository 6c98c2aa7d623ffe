#include "rescycle/supermatrix.hpp"

#include <sstream>

namespace rescycle {

std::optional<int> entry_degree(const Form& f) { return f.homogeneous_degree(); }

std::string to_string(const SuperMat<Form>& m, const VarTable& vars) {
  std::ostringstream os;
  os << "Hom(level " << m.src << " -> level " << m.tgt << "), " << m.rows << "x" << m.cols << "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << "  [ ";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << " | ";
      os << m.at(i, j).to_string(vars);
    }
    os << " ]\n";
  }
  return os.str();
}

} // namespace rescycle
