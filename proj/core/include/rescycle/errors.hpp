#pragma once

#include <stdexcept>
#include <string>

namespace rescycle {

// Error taxonomy mirrors the CLI exit codes: Parse -> 3, everything that means
// "this input is outside the supported fragment" -> 2. Result mismatches are
// reported through Report values, not exceptions.
enum class ErrKind {
  Parse,        // malformed case files / expressions
  Fragment,     // current-algebra operation left the supported fragment
  Unsupported,  // structurally valid input the engine does not handle
  Lift,         // chain-map lift failed within the degree bound
  Internal,     // broken invariant; a bug, not a user error
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace rescycle
