#include "opcheck/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "opcheck/errors.hpp"
#include "opcheck/kernels.hpp"

namespace opcheck {
namespace {

void check_same_dim(const char* op, const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim())
    throw ShapeError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
}

}  // namespace

HermitianMatrix HermitianMatrix::identity(int dim) {
  HermitianMatrix H(dim);
  for (int i = 0; i < dim; ++i) H.m_(i, i) = cd(1.0, 0.0);
  return H;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  HermitianMatrix H(static_cast<int>(d.size()));
  for (int i = 0; i < H.dim(); ++i) H.m_(i, i) = cd(d[static_cast<std::size_t>(i)], 0.0);
  return H;
}

HermitianMatrix HermitianMatrix::from_general(const GeneralMatrix& G) {
  if (G.rows() != G.cols())
    throw ShapeError("HermitianMatrix::from_general: matrix is " + std::to_string(G.rows()) +
                     "x" + std::to_string(G.cols()) + ", not square");
  const int n = G.rows();
  HermitianMatrix H(n);
  for (int i = 0; i < n; ++i) {
    H.m_(i, i) = cd(G(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cd v = 0.5 * (G(i, j) + std::conj(G(j, i)));
      H.m_(i, j) = v;
      H.m_(j, i) = std::conj(v);
    }
  }
  return H;
}

void HermitianMatrix::set(int i, int j, cd v) {
  if (i == j) {
    m_(i, i) = cd(v.real(), 0.0);
  } else {
    m_(i, j) = v;
    m_(j, i) = std::conj(v);
  }
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim(); ++i) t += m_(i, i).real();
  return t;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  check_same_dim("operator+", *this, o);
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  check_same_dim("operator-", *this, o);
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= cd(s, 0.0);
  return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

SpectralDecomposition eigh(const HermitianMatrix& H) {
  const int n = H.dim();
  GeneralMatrix A = H.mat();
  GeneralMatrix V = GeneralMatrix::identity(n);

  const double base = A.frobenius_norm();
  if (!H.all_finite()) throw NumericalFailure("eigh: non-finite input");
  const double thresh = 1e-14 * base;

  auto offdiag_mass = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += std::norm(A(p, q));
    return std::sqrt(2.0 * s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_mass() <= thresh) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cd apq = A(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const cd phase = apq / b;  // e^{i phi}
        const double alpha = A(p, p).real();
        const double gamma = A(q, q).real();
        // Zero A'(p,q) = e^{i phi} [(c^2 - s^2) b + c s (gamma - alpha)]:
        // with t = s/c this is t^2 - 2 tau t - 1 = 0; take the root of
        // smaller magnitude (the rotation angle <= pi/4) in rationalized
        // form for stability.
        const double tau = (gamma - alpha) / (2.0 * b);
        const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rows p, q of U^H A for j outside the pivot block; the columns
        // follow by mirroring since A stays exactly Hermitian.
        for (int j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const cd ap = A(p, j);
          const cd aq = A(q, j);
          const cd np = c * ap + s * phase * aq;
          const cd nq = -s * std::conj(phase) * ap + c * aq;
          A(p, j) = np;
          A(j, p) = std::conj(np);
          A(q, j) = nq;
          A(j, q) = std::conj(nq);
        }
        const double app = c * c * alpha + 2.0 * c * s * b + s * s * gamma;
        const double aqq = s * s * alpha - 2.0 * c * s * b + c * c * gamma;
        A(p, p) = cd(app, 0.0);
        A(q, q) = cd(aqq, 0.0);
        A(p, q) = cd(0.0, 0.0);
        A(q, p) = cd(0.0, 0.0);

        // V <- V U (accumulate eigenvectors as columns).
        for (int j = 0; j < n; ++j) {
          const cd vp = V(j, p);
          const cd vq = V(j, q);
          V(j, p) = c * vp + s * std::conj(phase) * vq;
          V(j, q) = -s * phase * vp + c * vq;
        }
      }
    }
  }
  if (!converged && offdiag_mass() > thresh)
    throw NumericalFailure("eigh: Jacobi sweeps did not converge within 100 sweeps");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return A(i, i).real() < A(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.vectors = GeneralMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.eigenvalues[static_cast<std::size_t>(k)] = A(src, src).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = V(i, src);
  }
  return out;
}

double spectral_norm(const HermitianMatrix& H) {
  if (H.dim() == 0) return 0.0;
  const auto ed = eigh(H);
  return std::max(std::abs(ed.eigenvalues.front()), std::abs(ed.eigenvalues.back()));
}

HermitianMatrix map_spectrum(const HermitianMatrix& H, SpectralDomain dom, const char* opname,
                             const std::function<double(double)>& f) {
  auto ed = eigh(H);
  const int n = H.dim();
  double scale = 0.0;
  for (double lam : ed.eigenvalues) scale = std::max(scale, std::abs(lam));
  const double floor = 1e-12 * scale;

  for (double& lam : ed.eigenvalues) {
    switch (dom) {
      case SpectralDomain::any:
        break;
      case SpectralDomain::psd:
        if (lam < -floor)
          throw DomainViolation(std::string(opname) + ": operand is not PSD (eigenvalue " +
                                std::to_string(lam) + ")");
        if (lam < 0.0) lam = 0.0;
        break;
      case SpectralDomain::pd:
        if (lam <= 0.0 || lam < floor)
          throw DomainViolation(std::string(opname) + ": operand is not PD (eigenvalue " +
                                std::to_string(lam) + ")");
        break;
    }
  }

  GeneralMatrix W = ed.vectors;
  for (int j = 0; j < n; ++j) {
    const double g = f(ed.eigenvalues[static_cast<std::size_t>(j)]);
    if (!std::isfinite(g))
      throw NumericalFailure(std::string(opname) + ": non-finite spectral image");
    for (int i = 0; i < n; ++i) W(i, j) *= g;
  }
  return HermitianMatrix::from_general(matmul_adjoint_right(W, ed.vectors));
}

HermitianMatrix apply_spectral(ScalarFn f, const HermitianMatrix& H) {
  switch (f.kind) {
    case ScalarFn::Kind::sqrt:
      return map_spectrum(H, SpectralDomain::psd, "sqrt", [](double x) { return std::sqrt(x); });
    case ScalarFn::Kind::inv_sqrt:
      return map_spectrum(H, SpectralDomain::pd, "inv_sqrt",
                          [](double x) { return 1.0 / std::sqrt(x); });
    case ScalarFn::Kind::inverse:
      return map_spectrum(H, SpectralDomain::pd, "inverse", [](double x) { return 1.0 / x; });
    case ScalarFn::Kind::log:
      return map_spectrum(H, SpectralDomain::pd, "log", [](double x) { return std::log(x); });
    case ScalarFn::Kind::exp:
      return map_spectrum(H, SpectralDomain::any, "exp", [](double x) { return std::exp(x); });
    case ScalarFn::Kind::power: {
      const double p = f.p;
      const bool integral = p == std::floor(p);
      SpectralDomain dom = SpectralDomain::psd;
      if (p < 0.0)
        dom = SpectralDomain::pd;
      else if (integral)
        dom = SpectralDomain::any;
      return map_spectrum(H, dom, "power", [p](double x) { return std::pow(x, p); });
    }
  }
  throw ConfigError("apply_spectral: invalid function tag");
}

HermitianMatrix congruence(const HermitianMatrix& X, const GeneralMatrix& C) {
  if (C.rows() != X.dim())
    throw ShapeError("congruence: C has " + std::to_string(C.rows()) +
                     " rows but operand dimension is " + std::to_string(X.dim()));
  return HermitianMatrix::from_general(matmul_adjoint_left(C, matmul(X.mat(), C)));
}

LoewnerVerdict loewner_geq(const HermitianMatrix& A, const HermitianMatrix& B, double tol) {
  check_same_dim("loewner_geq", A, B);
  const auto ed = eigh(A - B);
  LoewnerVerdict v;
  v.min_slack = ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.front();
  v.tol = tol;
  v.holds = v.min_slack >= -tol;
  if (!v.holds) {
    v.witness.resize(ed.eigenvalues.size());
    for (int i = 0; i < A.dim(); ++i) v.witness[static_cast<std::size_t>(i)] = ed.vectors(i, 0);
  }
  return v;
}

double effective_tolerance(double tol_abs, double tol_rel, const HermitianMatrix& A,
                           const HermitianMatrix& B) {
  return tol_abs + tol_rel * std::max(spectral_norm(A), spectral_norm(B));
}

HermitianMatrix tensor(const HermitianMatrix& A, const HermitianMatrix& B) {
  return HermitianMatrix::from_general(tensor(A.mat(), B.mat()));
}

GeneralMatrix random_ginibre(int rows, int cols, rng::Stream& rng) {
  GeneralMatrix G(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) G(i, j) = rng.complex_normal();
  return G;
}

GeneralMatrix random_unitary(int dim, rng::Stream& rng) {
  const GeneralMatrix G = random_ginibre(dim, dim, rng);
  // Two-pass modified Gram-Schmidt on the columns.
  GeneralMatrix Q(dim, dim);
  std::vector<cd> v(static_cast<std::size_t>(dim));
  std::vector<cd> qi(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = G(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < j; ++prev) {
        for (int i = 0; i < dim; ++i) qi[static_cast<std::size_t>(i)] = Q(i, prev);
        const cd proj = kernels::dotc(qi.data(), v.data(), v.size());
        for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] -= proj * qi[static_cast<std::size_t>(i)];
      }
    }
    const double nrm = std::sqrt(kernels::dotc(v.data(), v.data(), v.size()).real());
    if (!(nrm > 1e-154))
      throw NumericalFailure("random_unitary: Gram-Schmidt column collapse");
    for (int i = 0; i < dim; ++i) Q(i, j) = v[static_cast<std::size_t>(i)] / nrm;
  }
  return Q;
}

HermitianMatrix random_hermitian(int dim, rng::Stream& rng) {
  return HermitianMatrix::from_general(random_ginibre(dim, dim, rng));
}

HermitianMatrix random_pd(int dim, double cond_cap, rng::Stream& rng) {
  if (!(cond_cap >= 1.0))
    throw DomainViolation("random_pd: cond_cap must be >= 1, got " + std::to_string(cond_cap));
  const GeneralMatrix Q = random_unitary(dim, rng);
  const double lcap = std::log(cond_cap);
  GeneralMatrix W = Q;
  for (int j = 0; j < dim; ++j) {
    const double lam = std::exp(-rng.uniform() * lcap);  // log-uniform in [1/cond_cap, 1]
    for (int i = 0; i < dim; ++i) W(i, j) *= lam;
  }
  return HermitianMatrix::from_general(matmul_adjoint_right(W, Q));
}

GeneralMatrix random_contraction(int rows, int cols, rng::Stream& rng) {
  GeneralMatrix G = random_ginibre(rows, cols, rng);
  const HermitianMatrix gram = HermitianMatrix::from_general(matmul_adjoint_left(G, G));
  const auto ed = eigh(gram);
  const double smax = std::sqrt(std::max(0.0, ed.eigenvalues.back()));
  const double target = std::pow(rng.uniform(), 0.25) * (1.0 - 1e-6);
  if (smax > 0.0) G *= cd(target / smax, 0.0);
  return G;
}

HermitianMatrix random_psd_rank(int dim, int rank, rng::Stream& rng) {
  if (rank < 1 || rank > dim)
    throw DomainViolation("random_psd_rank: rank must be in [1, dim]");
  const GeneralMatrix R = random_ginibre(dim, rank, rng);
  HermitianMatrix P = HermitianMatrix::from_general(matmul_adjoint_right(R, R));
  const double s = spectral_norm(P);
  if (s > 0.0) P *= 1.0 / s;
  return P;
}

}  // namespace opcheck
