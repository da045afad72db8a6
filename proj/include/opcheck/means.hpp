#ifndef OPCHECK_MEANS_HPP
#define OPCHECK_MEANS_HPP

#include <span>
#include <string>

#include "opcheck/hermitian.hpp"

namespace opcheck {

inline constexpr double kKarcherTol = 1e-10;
inline constexpr int kKarcherMaxIter = 200;

/// Weighted geometric mean G(alpha; A, B) = B^{1/2} (B^{-1/2} A
/// B^{-1/2})^alpha B^{1/2} for alpha in [0, 1]; equals A^alpha
/// B^{1-alpha} when A and B commute.  Both operands must be PD.
HermitianMatrix binary_geometric(double alpha, const HermitianMatrix& A,
                                 const HermitianMatrix& B);

/// Inductive (Sagae-Tanabe) geometric mean: S_1 = A_1,
/// S_k = G(1/k; A_k, S_{k-1}).
HermitianMatrix inductive_mean(std::span<const HermitianMatrix> A);

/// Karcher mean: the unique PD solution of
/// sum_i log(X^{-1/2} A_i X^{-1/2}) = 0, found by fixed-point iteration
/// from the arithmetic mean.  The step is damped by the curvature bound
/// theta = min(1, 2 / (1 + L)) with L = (1/n) sum_i d_i coth(d_i),
/// d_i the Frobenius norm of the i-th log term: the undamped iteration
/// diverges once the operands are far apart (it overshoots whenever the
/// largest local Hessian eigenvalue d coth(d) exceeds ~3), while this
/// choice contracts globally.  Converged when the residual Frobenius
/// norm drops below tol; throws NonConvergence (with the last residual)
/// after max_iter updates.
HermitianMatrix karcher_mean(std::span<const HermitianMatrix> A, double tol = kKarcherTol,
                             int max_iter = kKarcherMaxIter);

/// || sum_i log(X^{-1/2} A_i X^{-1/2}) ||_F, the quantity karcher_mean
/// drives to zero.
double karcher_residual(std::span<const HermitianMatrix> A, const HermitianMatrix& X);

/// Parsed multivariable-mean specifier.
struct MeanSpec {
  enum class Kind { binary, inductive, karcher };
  Kind kind = Kind::binary;
  double alpha = 0.5;  // binary only
  int n = 3;           // operand count for inductive/karcher (binary: 2)
  double karcher_tol = kKarcherTol;
  int karcher_max_iter = kKarcherMaxIter;

  int arity() const { return kind == Kind::binary ? 2 : n; }
  std::string name() const;

  /// "binary:<a>" | "inductive[:n]" | "karcher[:n]".
  static MeanSpec parse(const std::string& s);
};

HermitianMatrix evaluate_mean(const MeanSpec& spec, std::span<const HermitianMatrix> A);

}  // namespace opcheck

#endif  // OPCHECK_MEANS_HPP
