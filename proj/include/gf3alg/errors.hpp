#ifndef GF3ALG_ERRORS_HPP
#define GF3ALG_ERRORS_HPP

#include <stdexcept>

namespace gf3alg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Thrown when a claimed subspace inclusion does not hold.
struct InclusionViolated : Error {
  using Error::Error;
};

/// Thrown when an endomorphism expected to cube to zero does not.
struct CubeNotZero : Error {
  using Error::Error;
};

struct NotDerivation : Error {
  using Error::Error;
};

/// Thrown when a vector handed to a subquotient projection lies outside
/// the numerator subspace.
struct ProjectionUndefined : Error {
  using Error::Error;
};

/// Randomized irreducibility test ran out of draws; the answer is
/// inconclusive, never wrong.
struct RetriesExhausted : Error {
  using Error::Error;
};

}  // namespace gf3alg

#endif
