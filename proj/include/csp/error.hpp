#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace csp {

enum class ErrorKind {
  Parse,           // malformed DSL text
  Dimension,       // index/size inconsistent with the declared dimension
  Jacobi,          // structure constants violate the Jacobi identity
  Metric,          // metric not symmetric positive-definite
  Pair,            // (eta, omega) fails the contact-symplectic pair conditions
  UnknownExample,  // no builtin with that name
  InvalidArgument, // operation preconditions violated
  Internal         // invariant that must hold on validated data failed
};

enum class PairFailure {
  None,
  NotClosed,        // d omega != 0
  DegenerateVolume, // eta ^ (d eta)^m ^ omega^n vanishes
  TypeMismatch,     // 2m + 2n + 1 != dim
  ClassicalCase,    // m = 0 or n = 0
  NoUniqueReeb,     // Reeb system not uniquely solvable (bug sentinel)
  NotIntegrable,    // distribution not bracket-closed
  NotAssociated     // metric not associated where required
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, int line = 0, int column = 0)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

  // Populated for kind() == Jacobi: the violating triple (i, j, k), 1-based.
  std::array<int, 3> jacobi_triple{0, 0, 0};
  // Populated for kind() == Pair.
  PairFailure pair_failure = PairFailure::None;

private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

} // namespace csp
