#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Bad arguments or malformed requests (CLI exit code 1).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rejected input file; `where` locates the offending record or field.
struct ParseError : std::runtime_error {
  std::string where;
  ParseError(std::string where_, const std::string& message)
      : std::runtime_error(where_.empty() ? message : where_ + ": " + message),
        where(std::move(where_)) {}
};

// Change-of-basis matrix with det = 0.
struct SingularBasisChange : std::runtime_error {
  SingularBasisChange() : std::runtime_error("basis change matrix is singular") {}
};

// Family matrix with determinant identically zero in Q(e).
struct SingularFamily : std::runtime_error {
  SingularFamily() : std::runtime_error("contraction family is singular over Q(e)") {}
};

// Some C^k_ij(e) has a pole at e = 0: the family does not define a contraction.
struct DivergentLimit : std::runtime_error {
  int i, j, k;  // 0-based indices
  DivergentLimit(int i_, int j_, int k_)
      : std::runtime_error("divergent limit at e=0 in bracket [" + std::to_string(i_ + 1) + "," +
                           std::to_string(j_ + 1) + "] -> " + std::to_string(k_ + 1)),
        i(i_),
        j(j_),
        k(k_) {}
};

}  // namespace casimir
