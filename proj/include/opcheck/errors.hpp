#ifndef OPCHECK_ERRORS_HPP
#define OPCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opcheck {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand dimensions do not line up.
struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Spectrum of an operand lies outside the domain of the requested
/// operation (e.g. log of a singular matrix), or a scalar parameter is
/// outside its admissible range.
struct DomainViolation : Error {
  explicit DomainViolation(const std::string& what) : Error(what) {}
};

/// An iterative numerical procedure failed (eigensolver sweep cap,
/// exhausted resampling budget, ...).
struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& what) : Error(what) {}
};

/// Fixed-point iteration did not reach its tolerance; carries the last
/// residual seen.
struct NonConvergence : NumericalFailure {
  NonConvergence(const std::string& what, double residual)
      : NumericalFailure(what), last_residual(residual) {}
  double last_residual;
};

/// A descriptor flag required by the operation is not set.
struct FlagViolation : Error {
  explicit FlagViolation(const std::string& what) : Error(what) {}
};

/// An operand list that must be nonempty is empty.
struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

/// A claimed Choi matrix is not positive semi-definite.
struct NotCP : Error {
  explicit NotCP(const std::string& what) : Error(what) {}
};

/// The normalizer Sum C_i^*C_i (or Sum C_iC_i^*) is numerically singular.
struct SingularNormalization : Error {
  explicit SingularNormalization(const std::string& what) : Error(what) {}
};

/// Bad suite configuration, unknown specifier string, malformed file.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace opcheck

#endif  // OPCHECK_ERRORS_HPP
