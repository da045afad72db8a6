#include "opcheck/kernels.hpp"

// Reference kernels.  Deliberately plain triple loops: these define the
// semantics the SIMD variants are tested against.

namespace opcheck::kernels {
namespace {

void nn_scalar(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cd* Ci = C + i * n;
    for (std::size_t j = 0; j < n; ++j) Ci[j] = cd(0.0, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
      const cd a = A[i * k + p];
      const cd* Bp = B + p * n;
      for (std::size_t j = 0; j < n; ++j) Ci[j] += a * Bp[j];
    }
  }
}

// A stored k x m; computes (A^H B)(i, j) = sum_p conj(A(p, i)) B(p, j).
void cn_scalar(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cd* Ci = C + i * n;
    for (std::size_t j = 0; j < n; ++j) Ci[j] = cd(0.0, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
      const cd a = std::conj(A[p * m + i]);
      const cd* Bp = B + p * n;
      for (std::size_t j = 0; j < n; ++j) Ci[j] += a * Bp[j];
    }
  }
}

// B stored n x k; computes (A B^H)(i, j) = sum_p A(i, p) conj(B(j, p)).
void nc_scalar(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const cd* Ai = A + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const cd* Bj = B + j * k;
      cd acc(0.0, 0.0);
      for (std::size_t p = 0; p < k; ++p) acc += Ai[p] * std::conj(Bj[p]);
      C[i * n + j] = acc;
    }
  }
}

cd dotc_scalar(const cd* x, const cd* y, std::size_t n) {
  cd acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace

namespace detail {
const Dispatch scalar_table = {nn_scalar, cn_scalar, nc_scalar, dotc_scalar};
}  // namespace detail

}  // namespace opcheck::kernels
