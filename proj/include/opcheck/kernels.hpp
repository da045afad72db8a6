#ifndef OPCHECK_KERNELS_HPP
#define OPCHECK_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string>

namespace opcheck::kernels {

// Low-level complex kernels behind all matrix products in the library.
// Each kernel has a scalar reference implementation and an AVX2+FMA
// variant; the active backend is chosen once per process (CPUID probe,
// overridable via the OPCHECK_KERNELS environment variable or
// set_backend).  Variants are equivalence-tested against each other; any
// numeric difference comes from FMA contraction only.
//
// Matrices are dense row-major std::complex<double> with trivial stride.

enum class Backend { scalar, avx2, automatic };

/// Select the backend explicitly ("scalar" | "avx2" | "auto").  Throws
/// ConfigError on unknown names or when avx2 is requested on hardware
/// without AVX2+FMA.
void set_backend(Backend b);
void set_backend(const std::string& name);

/// Name of the backend that is actually executing ("scalar" or "avx2").
std::string active_backend();

/// True when the CPU supports the AVX2+FMA variants.
bool avx2_available();

using cd = std::complex<double>;

/// C = A * B.  A is m x k, B is k x n, C is m x n (C preallocated,
/// overwritten; C must not alias A or B).
void matmul_nn(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n);

/// C = A^H * B where A is stored k x m (so C is m x n, B is k x n).
void matmul_cn(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n);

/// C = A * B^H where B is stored n x k (so A is m x k, C is m x n).
void matmul_nc(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n);

/// sum_i conj(x[i]) * y[i].
cd dotc(const cd* x, const cd* y, std::size_t n);

namespace detail {

struct Dispatch {
  void (*nn)(const cd*, const cd*, cd*, std::size_t, std::size_t, std::size_t);
  void (*cn)(const cd*, const cd*, cd*, std::size_t, std::size_t, std::size_t);
  void (*nc)(const cd*, const cd*, cd*, std::size_t, std::size_t, std::size_t);
  cd (*dotc)(const cd*, const cd*, std::size_t);
};

// Exposed so the equivalence tests can drive both variants directly,
// bypassing the process-wide selection.
extern const Dispatch scalar_table;
extern const Dispatch avx2_table;

}  // namespace detail

}  // namespace opcheck::kernels

#endif  // OPCHECK_KERNELS_HPP
