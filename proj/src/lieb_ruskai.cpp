#include "opcheck/lieb_ruskai.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "opcheck/errors.hpp"

namespace opcheck {

HermitianMatrix lr_basic(const HermitianMatrix& A, const GeneralMatrix& K) {
  if (K.rows() != A.dim() || K.cols() != A.dim())
    throw ShapeError("lr_basic: K must be square of dimension " + std::to_string(A.dim()));
  return congruence(apply_spectral(ScalarFn::inverse(), A), K);
}

HermitianMatrix lr_n(const MeanSpec& mean, std::span<const HermitianMatrix> A,
                     const HermitianMatrix& C) {
  if (A.empty()) throw EmptyInput("lr_n: no operands");
  if (C.dim() != A.front().dim()) throw ShapeError("lr_n: C dimension mismatch");
  const HermitianMatrix G = evaluate_mean(mean, A);
  return congruence(apply_spectral(ScalarFn::inverse(), G), C.mat());
}

HermitianMatrix lr_weighted(double alpha, const HermitianMatrix& A, const HermitianMatrix& B,
                            const GeneralMatrix& C) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainViolation("lr_weighted: alpha must be in [0,1], got " + std::to_string(alpha));
  if (A.dim() != B.dim() || C.rows() != A.dim())
    throw ShapeError("lr_weighted: operand dimensions mismatch");
  const HermitianMatrix Bh = apply_spectral(ScalarFn::sqrt(), B);
  const HermitianMatrix Bih = apply_spectral(ScalarFn::inv_sqrt(), B);
  const HermitianMatrix M = congruence(apply_spectral(ScalarFn::inverse(), A), Bh.mat());
  const HermitianMatrix Ma = map_spectrum(M, SpectralDomain::pd, "lr_weighted",
                                          [alpha](double x) { return std::pow(x, alpha); });
  return congruence(congruence(Ma, Bih.mat()), C);
}

HermitianMatrix block_embed(const HermitianMatrix& A, const GeneralMatrix& K) {
  const int n = A.dim();
  if (K.rows() != n || K.cols() != n)
    throw ShapeError("block_embed: K must be square of dimension " + std::to_string(n));
  HermitianMatrix B(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j >= i) {
        B.set(i, j, A(i, j));
        B.set(n + i, n + j, A(i, j));
      }
      B.set(i, n + j, std::conj(K(j, i)));  // top-right block is K^H
    }
  return B;
}

}  // namespace opcheck
