#ifndef OPCHECK_TEST_UTIL_HPP
#define OPCHECK_TEST_UTIL_HPP

#include <vector>

#include "opcheck/hermitian.hpp"

namespace testutil {

inline opcheck::HermitianMatrix diag(const std::vector<double>& d) {
  return opcheck::HermitianMatrix::diagonal(d);
}

inline double frob_diff(const opcheck::HermitianMatrix& a, const opcheck::HermitianMatrix& b) {
  return (a - b).frobenius_norm();
}

inline double frob_diff(const opcheck::GeneralMatrix& a, const opcheck::GeneralMatrix& b) {
  return (a - b).frobenius_norm();
}

/// Relative Frobenius gap, safe at zero.
inline double rel_diff(const opcheck::HermitianMatrix& a, const opcheck::HermitianMatrix& b) {
  return frob_diff(a, b) / (1.0 + a.frobenius_norm());
}

}  // namespace testutil

#endif  // OPCHECK_TEST_UTIL_HPP
