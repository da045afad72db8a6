#include "opcheck/kernels.hpp"

// AVX2+FMA variants.  Complex doubles are interleaved [re, im], so one
// __m256d holds two complex numbers.  For a broadcast complex scalar a
// and a packed pair b, the product a*b is
//
//   fmaddsub(bcast(a.re), b, bcast(a.im) * swap(b))
//
// where swap exchanges re/im within each pair: fmaddsub subtracts in the
// even (real) lanes and adds in the odd (imaginary) lanes, which is
// exactly the complex-multiply sign pattern.  Results differ from the
// scalar kernels only through FMA contraction.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace opcheck::kernels {
namespace {

__attribute__((target("avx2,fma"))) inline __m256d cmul_bcast(__m256d vre, __m256d vim,
                                                              __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(vre, b, _mm256_mul_pd(vim, bswap));
}

__attribute__((target("avx2,fma"))) void nn_avx2(const cd* A, const cd* B, cd* C, std::size_t m,
                                                 std::size_t k, std::size_t n) {
  double* Cd = reinterpret_cast<double*>(C);
  const double* Bd = reinterpret_cast<const double*>(B);
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    double* Ci = Cd + 2 * i * n;
    for (std::size_t j = 0; j < 2 * n; ++j) Ci[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cd a = A[i * k + p];
      const __m256d vre = _mm256_set1_pd(a.real());
      const __m256d vim = _mm256_set1_pd(a.imag());
      const double* Bp = Bd + 2 * p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d b = _mm256_loadu_pd(Bp + 2 * j);
        const __m256d c = _mm256_loadu_pd(Ci + 2 * j);
        _mm256_storeu_pd(Ci + 2 * j, _mm256_add_pd(c, cmul_bcast(vre, vim, b)));
      }
      if (j < n) {
        const cd prod = a * B[p * n + j];
        Ci[2 * j] += prod.real();
        Ci[2 * j + 1] += prod.imag();
      }
    }
  }
}

// A stored k x m; broadcast conj(A(p, i)) = (re, -im) and reuse the same
// sign pattern with the negated imaginary part.
__attribute__((target("avx2,fma"))) void cn_avx2(const cd* A, const cd* B, cd* C, std::size_t m,
                                                 std::size_t k, std::size_t n) {
  double* Cd = reinterpret_cast<double*>(C);
  const double* Bd = reinterpret_cast<const double*>(B);
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    double* Ci = Cd + 2 * i * n;
    for (std::size_t j = 0; j < 2 * n; ++j) Ci[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cd a = std::conj(A[p * m + i]);
      const __m256d vre = _mm256_set1_pd(a.real());
      const __m256d vim = _mm256_set1_pd(a.imag());
      const double* Bp = Bd + 2 * p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d b = _mm256_loadu_pd(Bp + 2 * j);
        const __m256d c = _mm256_loadu_pd(Ci + 2 * j);
        _mm256_storeu_pd(Ci + 2 * j, _mm256_add_pd(c, cmul_bcast(vre, vim, b)));
      }
      if (j < n) {
        const cd prod = a * B[p * n + j];
        Ci[2 * j] += prod.real();
        Ci[2 * j + 1] += prod.imag();
      }
    }
  }
}

// Row-times-conjugated-row dot: acc1 accumulates a.re*b.re / a.im*b.im in
// even/odd lanes (adjacent-sum = real part), acc2 accumulates
// a.im*b.re / a.re*b.im (even-minus-odd = imaginary part).
__attribute__((target("avx2,fma"))) void nc_avx2(const cd* A, const cd* B, cd* C, std::size_t m,
                                                 std::size_t k, std::size_t n) {
  const double* Ad = reinterpret_cast<const double*>(A);
  const double* Bd = reinterpret_cast<const double*>(B);
  const std::size_t k2 = k & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    const double* Ai = Ad + 2 * i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const double* Bj = Bd + 2 * j * k;
      __m256d acc1 = _mm256_setzero_pd();
      __m256d acc2 = _mm256_setzero_pd();
      std::size_t p = 0;
      for (; p < k2; p += 2) {
        const __m256d a = _mm256_loadu_pd(Ai + 2 * p);
        const __m256d b = _mm256_loadu_pd(Bj + 2 * p);
        acc1 = _mm256_fmadd_pd(a, b, acc1);
        acc2 = _mm256_fmadd_pd(_mm256_permute_pd(a, 0b0101), b, acc2);
      }
      double s1[4], s2[4];
      _mm256_storeu_pd(s1, acc1);
      _mm256_storeu_pd(s2, acc2);
      double re = (s1[0] + s1[1]) + (s1[2] + s1[3]);
      double im = (s2[0] - s2[1]) + (s2[2] - s2[3]);
      if (p < k) {
        const cd prod = A[i * k + p] * std::conj(B[j * k + p]);
        re += prod.real();
        im += prod.imag();
      }
      C[i * n + j] = cd(re, im);
    }
  }
}

__attribute__((target("avx2,fma"))) cd dotc_avx2(const cd* x, const cd* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  const std::size_t n2 = n & ~std::size_t(1);
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d a = _mm256_loadu_pd(xd + 2 * i);
    const __m256d b = _mm256_loadu_pd(yd + 2 * i);
    acc1 = _mm256_fmadd_pd(a, b, acc1);
    acc2 = _mm256_fmadd_pd(_mm256_permute_pd(a, 0b0101), b, acc2);
  }
  double s1[4], s2[4];
  _mm256_storeu_pd(s1, acc1);
  _mm256_storeu_pd(s2, acc2);
  // conj(x)*y: real = x.re*y.re + x.im*y.im, imag = x.re*y.im - x.im*y.re.
  double re = (s1[0] + s1[1]) + (s1[2] + s1[3]);
  double im = (s2[1] - s2[0]) + (s2[3] - s2[2]);
  if (i < n) {
    const cd prod = std::conj(x[i]) * y[i];
    re += prod.real();
    im += prod.imag();
  }
  return {re, im};
}

}  // namespace

namespace detail {
const Dispatch avx2_table = {nn_avx2, cn_avx2, nc_avx2, dotc_avx2};
}  // namespace detail

}  // namespace opcheck::kernels

#else  // non-x86 build: alias the scalar table so the symbol exists.

namespace opcheck::kernels::detail {
const Dispatch avx2_table = scalar_table;
}

#endif
