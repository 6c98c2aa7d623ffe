#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "rescycle/errors.hpp"

namespace rescycle {

// Immutable list of variable names; declaration order fixes the index of each
// variable and thereby the monomial order used for normalization. All algebra
// works on indices, names exist only for parsing and printing.
class VarTable {
public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) fail(ErrKind::Parse, "empty variable name");
      for (char ch : names_[i])
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
          fail(ErrKind::Parse, "invalid variable name: " + names_[i]);
      if (std::isdigit(static_cast<unsigned char>(names_[i][0])))
        fail(ErrKind::Parse, "variable name starts with a digit: " + names_[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == names_[i]) fail(ErrKind::Parse, "duplicate variable: " + names_[i]);
    }
  }

  int index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

private:
  std::vector<std::string> names_;
};

} // namespace rescycle
