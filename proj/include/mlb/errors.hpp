#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raw data does not have the shape an operation requires (e.g. not dim^3).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Operand dimensions do not line up.
class DimMismatch : public Error {
public:
  using Error::Error;
};

/// A permutation or map list does not match the arity of a tensor.
class ArityMismatch : public Error {
public:
  using Error::Error;
};

class Singular : public Error {
public:
  Singular(std::size_t rank, std::size_t size)
      : Error("matrix is singular: rank " + std::to_string(rank) + " < " + std::to_string(size)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

private:
  std::size_t rank_;
};

/// A value failed the axioms required to construct a validated object.  The
/// message names the failing check and the first violating index tuple.
class AxiomViolation : public Error {
public:
  using Error::Error;
};

class NotMockLie : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotRepresentation : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotAntiAssociative : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotMockPreLie : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotOOperator : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotSymplectic : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class FormNotAdmissible : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotMatchedPair : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotBialgebra : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};
class NotSkew : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};

}  // namespace mlb
