#pragma once

#include <stdexcept>
#include <string>

namespace hopfcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, unparsable files, dimension mismatches.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A structure failed one of its defining axioms (associativity, coassociativity, ...).
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

/// A randomized search ran out of its retry budget without a conclusive answer.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// An instance does not satisfy a standing hypothesis (normality, semisimplicity of restrictions, ...).
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfcert
