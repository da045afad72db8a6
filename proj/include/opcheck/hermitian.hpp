#ifndef OPCHECK_HERMITIAN_HPP
#define OPCHECK_HERMITIAN_HPP

#include <functional>
#include <vector>

#include "opcheck/matrix.hpp"
#include "opcheck/rng.hpp"

namespace opcheck {

/// Hermitian matrix with exactly enforced symmetry: for every stored
/// pair, entry(j,i) == conj(entry(i,j)) bitwise and the diagonal is
/// exactly real.  Construction from general data symmetrizes via
/// (G + G^H)/2.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int dim) : m_(dim, dim) {}

  static HermitianMatrix identity(int dim);
  static HermitianMatrix diagonal(const std::vector<double>& d);
  /// Symmetrize a (approximately Hermitian) square matrix.
  static HermitianMatrix from_general(const GeneralMatrix& G);

  int dim() const { return m_.rows(); }
  cd operator()(int i, int j) const { return m_(i, j); }
  /// Sets entry (i, j) and its mirror (j, i) = conj(v); for i == j the
  /// imaginary part is discarded.
  void set(int i, int j, cd v);

  const GeneralMatrix& mat() const { return m_; }

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const;
  bool all_finite() const { return m_.all_finite(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

 private:
  GeneralMatrix m_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, HermitianMatrix a);

/// Eigendecomposition H = V diag(eigenvalues) V^H with eigenvalues
/// ascending and V's columns the corresponding orthonormal eigenvectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  GeneralMatrix vectors;
};

/// Cyclic complex Jacobi.  Converged when the off-diagonal Frobenius
/// mass drops below 1e-14 * ||H||_F; throws NumericalFailure after 100
/// sweeps without convergence.
SpectralDecomposition eigh(const HermitianMatrix& H);

/// Spectral (operator) norm = max |eigenvalue|.
double spectral_norm(const HermitianMatrix& H);

/// Scalar functions liftable to Hermitian arguments through the spectrum.
struct ScalarFn {
  enum class Kind { sqrt, inv_sqrt, inverse, power, log, exp } kind;
  double p = 0.0;

  static ScalarFn sqrt() { return {Kind::sqrt, 0.0}; }
  static ScalarFn inv_sqrt() { return {Kind::inv_sqrt, 0.0}; }
  static ScalarFn inverse() { return {Kind::inverse, 0.0}; }
  static ScalarFn power(double p) { return {Kind::power, p}; }
  static ScalarFn log() { return {Kind::log, 0.0}; }
  static ScalarFn exp() { return {Kind::exp, 0.0}; }
};

/// f(H) = V diag(f(lambda)) V^H.  Functions needing positivity reject
/// spectra outside their domain: strictly positive functions (inverse,
/// inv_sqrt, log, negative powers) require lambda_min > 0 and
/// lambda_min >= 1e-12 * ||H||_2, else DomainViolation; nonnegative
/// functions (sqrt, fractional powers >= 0) clamp eigenvalues in
/// [-1e-12 * ||H||_2, 0) to zero and reject anything more negative.
HermitianMatrix apply_spectral(ScalarFn f, const HermitianMatrix& H);

enum class SpectralDomain { any, psd, pd };

/// Generic spectral lift used by apply_spectral and by callers needing
/// functions outside the fixed tag set (e.g. t -> t log t).  `opname`
/// appears in error messages.
HermitianMatrix map_spectrum(const HermitianMatrix& H, SpectralDomain dom, const char* opname,
                             const std::function<double(double)>& f);

/// C^H X C (shape: C is dim(X) x m, result is m x m).
HermitianMatrix congruence(const HermitianMatrix& X, const GeneralMatrix& C);

/// Result of a Loewner comparison A >= B.
struct LoewnerVerdict {
  bool holds;
  /// Most negative eigenvalue of A - B (>= 0 when A - B is PSD).
  double min_slack;
  /// Tolerance the slack was compared against.
  double tol;
  /// Eigenvector for min_slack; populated only when the check fails.
  std::vector<cd> witness;
};

/// A >= B in the Loewner order, up to slack tolerance `tol`:
/// holds iff lambda_min(A - B) >= -tol.
LoewnerVerdict loewner_geq(const HermitianMatrix& A, const HermitianMatrix& B, double tol);

/// tol_abs + tol_rel * max(||A||_2, ||B||_2).
double effective_tolerance(double tol_abs, double tol_rel, const HermitianMatrix& A,
                           const HermitianMatrix& B);

inline constexpr double kDefaultTolAbs = 1e-10;
inline constexpr double kDefaultTolRel = 1e-9;

HermitianMatrix tensor(const HermitianMatrix& A, const HermitianMatrix& B);

/// Complex Ginibre: i.i.d. standard complex normal entries.
GeneralMatrix random_ginibre(int rows, int cols, rng::Stream& rng);

/// Haar-ish unitary: two-pass modified Gram-Schmidt orthonormalization
/// of a Ginibre draw.
GeneralMatrix random_unitary(int dim, rng::Stream& rng);

/// Gaussian Hermitian matrix (symmetrized Ginibre).
HermitianMatrix random_hermitian(int dim, rng::Stream& rng);

/// Random positive definite matrix with spectrum in [1/cond_cap, 1]
/// (log-uniform) in a Haar-random eigenbasis.  Requires cond_cap >= 1.
HermitianMatrix random_pd(int dim, double cond_cap, rng::Stream& rng);

/// Random strict contraction: Ginibre rescaled so the largest singular
/// value is u^(1/4) * (1 - 1e-6) for uniform u (biased toward
/// near-unit norm, where Jensen-type inequalities are tightest).
GeneralMatrix random_contraction(int rows, int cols, rng::Stream& rng);

/// Random PSD matrix of the given rank (<= dim): R R^H for a dim x rank
/// Ginibre R, normalized to unit spectral norm.
HermitianMatrix random_psd_rank(int dim, int rank, rng::Stream& rng);

}  // namespace opcheck

#endif  // OPCHECK_HERMITIAN_HPP
