#ifndef CUTLATTICE_ERROR_HPP
#define CUTLATTICE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cutlattice {

enum class ErrorKind {
  Parse,       // malformed text input (position-reported where possible)
  Constraint,  // well-formed input violating a domain invariant
  Domain,      // operation not defined for this input
  Limit,       // configured resource budget exceeded
  Internal,    // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace cutlattice

#endif
