#include "opcheck/matrix.hpp"

#include <cmath>
#include <string>

#include "opcheck/errors.hpp"
#include "opcheck/kernels.hpp"

namespace opcheck {
namespace {

[[noreturn]] void shape_fail(const char* op, int ar, int ac, int br, int bc) {
  throw ShapeError(std::string(op) + ": incompatible shapes " + std::to_string(ar) + "x" +
                   std::to_string(ac) + " and " + std::to_string(br) + "x" + std::to_string(bc));
}

void check_same_shape(const char* op, const GeneralMatrix& a, const GeneralMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    shape_fail(op, a.rows(), a.cols(), b.rows(), b.cols());
}

}  // namespace

GeneralMatrix::GeneralMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeError("matrix dimensions must be nonnegative");
  a_.assign(static_cast<std::size_t>(rows) * cols, cd(0.0, 0.0));
}

GeneralMatrix GeneralMatrix::identity(int n) {
  GeneralMatrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = cd(1.0, 0.0);
  return I;
}

GeneralMatrix GeneralMatrix::adjoint() const {
  GeneralMatrix R(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) R(j, i) = std::conj((*this)(i, j));
  return R;
}

GeneralMatrix GeneralMatrix::transpose() const {
  GeneralMatrix R(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) R(j, i) = (*this)(i, j);
  return R;
}

GeneralMatrix GeneralMatrix::conjugate() const {
  GeneralMatrix R(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) R(i, j) = std::conj((*this)(i, j));
  return R;
}

double GeneralMatrix::frobenius_norm() const {
  if (a_.empty()) return 0.0;
  return std::sqrt(kernels::dotc(a_.data(), a_.data(), a_.size()).real());
}

bool GeneralMatrix::all_finite() const {
  for (const cd& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

GeneralMatrix& GeneralMatrix::operator+=(const GeneralMatrix& o) {
  check_same_shape("operator+", *this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

GeneralMatrix& GeneralMatrix::operator-=(const GeneralMatrix& o) {
  check_same_shape("operator-", *this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

GeneralMatrix& GeneralMatrix::operator*=(cd s) {
  for (cd& v : a_) v *= s;
  return *this;
}

GeneralMatrix operator+(GeneralMatrix a, const GeneralMatrix& b) { return a += b; }
GeneralMatrix operator-(GeneralMatrix a, const GeneralMatrix& b) { return a -= b; }
GeneralMatrix operator*(cd s, GeneralMatrix a) { return a *= s; }
GeneralMatrix operator*(GeneralMatrix a, cd s) { return a *= s; }

GeneralMatrix matmul(const GeneralMatrix& A, const GeneralMatrix& B) {
  if (A.cols() != B.rows()) shape_fail("matmul", A.rows(), A.cols(), B.rows(), B.cols());
  GeneralMatrix C(A.rows(), B.cols());
  kernels::matmul_nn(A.data(), B.data(), C.data(), A.rows(), A.cols(), B.cols());
  return C;
}

GeneralMatrix matmul_adjoint_left(const GeneralMatrix& A, const GeneralMatrix& B) {
  if (A.rows() != B.rows())
    shape_fail("matmul_adjoint_left", A.rows(), A.cols(), B.rows(), B.cols());
  GeneralMatrix C(A.cols(), B.cols());
  kernels::matmul_cn(A.data(), B.data(), C.data(), A.cols(), A.rows(), B.cols());
  return C;
}

GeneralMatrix matmul_adjoint_right(const GeneralMatrix& A, const GeneralMatrix& B) {
  if (A.cols() != B.cols())
    shape_fail("matmul_adjoint_right", A.rows(), A.cols(), B.rows(), B.cols());
  GeneralMatrix C(A.rows(), B.rows());
  kernels::matmul_nc(A.data(), B.data(), C.data(), A.rows(), A.cols(), B.rows());
  return C;
}

GeneralMatrix tensor(const GeneralMatrix& A, const GeneralMatrix& B) {
  GeneralMatrix R(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i1 = 0; i1 < A.rows(); ++i1)
    for (int j1 = 0; j1 < A.cols(); ++j1) {
      const cd a = A(i1, j1);
      if (a == cd(0.0, 0.0)) continue;
      for (int i2 = 0; i2 < B.rows(); ++i2)
        for (int j2 = 0; j2 < B.cols(); ++j2)
          R(i1 * B.rows() + i2, j1 * B.cols() + j2) = a * B(i2, j2);
    }
  return R;
}

}  // namespace opcheck
