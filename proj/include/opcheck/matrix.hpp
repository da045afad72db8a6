#ifndef OPCHECK_MATRIX_HPP
#define OPCHECK_MATRIX_HPP

#include <complex>
#include <vector>

namespace opcheck {

using cd = std::complex<double>;

/// Dense row-major complex matrix.  All products route through the
/// kernel dispatch (opcheck/kernels.hpp).
class GeneralMatrix {
 public:
  GeneralMatrix() = default;
  GeneralMatrix(int rows, int cols);

  static GeneralMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cd& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  cd* data() { return a_.data(); }
  const cd* data() const { return a_.data(); }

  GeneralMatrix adjoint() const;
  GeneralMatrix transpose() const;
  GeneralMatrix conjugate() const;

  double frobenius_norm() const;
  bool all_finite() const;

  GeneralMatrix& operator+=(const GeneralMatrix& o);
  GeneralMatrix& operator-=(const GeneralMatrix& o);
  GeneralMatrix& operator*=(cd s);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cd> a_;
};

GeneralMatrix operator+(GeneralMatrix a, const GeneralMatrix& b);
GeneralMatrix operator-(GeneralMatrix a, const GeneralMatrix& b);
GeneralMatrix operator*(cd s, GeneralMatrix a);
GeneralMatrix operator*(GeneralMatrix a, cd s);

/// A * B.
GeneralMatrix matmul(const GeneralMatrix& A, const GeneralMatrix& B);
/// A^H * B (no explicit adjoint is formed).
GeneralMatrix matmul_adjoint_left(const GeneralMatrix& A, const GeneralMatrix& B);
/// A * B^H (no explicit adjoint is formed).
GeneralMatrix matmul_adjoint_right(const GeneralMatrix& A, const GeneralMatrix& B);

/// Kronecker product, row-major composite index (i1*rows(B) + i2).
GeneralMatrix tensor(const GeneralMatrix& A, const GeneralMatrix& B);

}  // namespace opcheck

#endif  // OPCHECK_MATRIX_HPP
