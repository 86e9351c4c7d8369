#pragma once

#include <stdexcept>
#include <string>

namespace thinlayer {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside the admissible range (nu outside (-1, 0.5), H <= 0,
// degenerate weights, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// nu = 0.5 reached a formula that needs lambda (or 1/(1-2nu)).
class IncompressibleSingularity : public Error {
 public:
  using Error::Error;
};

// Fields that must share a lattice do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// delta0 <= 0: the surfaces touch at most at a point.
class NoContact : public Error {
 public:
  using Error::Error;
};

// Iterative or root-finding solver failed; the message carries diagnostics.
class SolverError : public Error {
 public:
  using Error::Error;
};

// File or parse failure while ingesting external data.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace thinlayer
