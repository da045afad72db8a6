#include "opcheck/cpmaps.hpp"

#include <cmath>
#include <string>

#include "opcheck/errors.hpp"

namespace opcheck {
namespace {

constexpr double kFlagTol = 1e-10;

// sum_i C_i^H C_i (dim_out) or sum_i C_i C_i^H (dim_in).
HermitianMatrix normalizer(const CPMap& phi, bool left_adjoint) {
  const int d = left_adjoint ? phi.dim_out : phi.dim_in;
  HermitianMatrix S(d);
  for (const auto& C : phi.kraus)
    S += HermitianMatrix::from_general(left_adjoint ? matmul_adjoint_left(C, C)
                                                    : matmul_adjoint_right(C, C));
  return S;
}

}  // namespace

CPMap make_cpmap(std::vector<GeneralMatrix> kraus) {
  if (kraus.empty()) throw EmptyInput("make_cpmap: empty Kraus factor list");
  CPMap phi;
  phi.dim_in = kraus.front().rows();
  phi.dim_out = kraus.front().cols();
  if (phi.dim_in < 1 || phi.dim_out < 1)
    throw ShapeError("make_cpmap: Kraus factors must be nonempty matrices");
  for (const auto& C : kraus) {
    if (C.rows() != phi.dim_in || C.cols() != phi.dim_out)
      throw ShapeError("make_cpmap: Kraus factors of mixed shape");
    if (!C.all_finite()) throw NumericalFailure("make_cpmap: non-finite Kraus entry");
  }
  phi.kraus = std::move(kraus);
  phi.unital = (normalizer(phi, true) - HermitianMatrix::identity(phi.dim_out))
                   .frobenius_norm() <= kFlagTol;
  phi.trace_preserving = (normalizer(phi, false) - HermitianMatrix::identity(phi.dim_in))
                             .frobenius_norm() <= kFlagTol;
  return phi;
}

CPMap identity_channel(int dim) {
  std::vector<GeneralMatrix> kraus;
  kraus.push_back(GeneralMatrix::identity(dim));
  return make_cpmap(std::move(kraus));
}

HermitianMatrix apply(const CPMap& phi, const HermitianMatrix& A) {
  if (A.dim() != phi.dim_in)
    throw ShapeError("apply: operand dimension " + std::to_string(A.dim()) +
                     " does not match dim_in " + std::to_string(phi.dim_in));
  HermitianMatrix R(phi.dim_out);
  for (const auto& C : phi.kraus) R += congruence(A, C);
  return R;
}

GeneralMatrix apply(const CPMap& phi, const GeneralMatrix& A) {
  if (A.rows() != phi.dim_in || A.cols() != phi.dim_in)
    throw ShapeError("apply: operand must be square of dimension " +
                     std::to_string(phi.dim_in));
  GeneralMatrix R(phi.dim_out, phi.dim_out);
  for (const auto& C : phi.kraus) R += matmul_adjoint_left(C, matmul(A, C));
  return R;
}

ChoiMatrix choi(const CPMap& phi) {
  const int di = phi.dim_in;
  const int dd = di * phi.dim_out;
  GeneralMatrix J(dd, dd);
  GeneralMatrix E(di, di);
  for (int i = 0; i < di; ++i)
    for (int j = 0; j < di; ++j) {
      E(i, j) = cd(1.0, 0.0);
      J += tensor(E, apply(phi, E));
      E(i, j) = cd(0.0, 0.0);
    }
  return {HermitianMatrix::from_general(J), di, phi.dim_out};
}

CPMap kraus_from_choi(const ChoiMatrix& J) {
  const int di = J.dim_in;
  const int dout = J.dim_out;
  if (J.matrix.dim() != di * dout)
    throw ShapeError("kraus_from_choi: Choi dimension does not equal dim_in * dim_out");
  const auto ed = eigh(J.matrix);
  const double top = std::max(std::abs(ed.eigenvalues.front()), std::abs(ed.eigenvalues.back()));
  if (ed.eigenvalues.front() < -1e-8 * top)
    throw NotCP("kraus_from_choi: Choi matrix has eigenvalue " +
                std::to_string(ed.eigenvalues.front()));
  const double cutoff = 1e-12 * J.matrix.trace();

  std::vector<GeneralMatrix> kraus;
  for (int a = J.matrix.dim() - 1; a >= 0; --a) {
    const double lam = ed.eigenvalues[static_cast<std::size_t>(a)];
    if (!(lam > cutoff) || lam <= 0.0) break;  // ascending order: all smaller ones follow
    const double s = std::sqrt(lam);
    GeneralMatrix C(di, dout);
    for (int i = 0; i < di; ++i)
      for (int r = 0; r < dout; ++r) C(i, r) = std::conj(s * ed.vectors(i * dout + r, a));
    kraus.push_back(std::move(C));
  }
  if (kraus.empty()) kraus.emplace_back(di, dout);  // the zero map
  return make_cpmap(std::move(kraus));
}

CPMap partial_trace_map(int d1, int d2, int factor) {
  if (d1 < 1 || d2 < 1) throw ShapeError("partial_trace_map: factor dimensions must be >= 1");
  if (factor != 1 && factor != 2)
    throw ConfigError("partial_trace_map: traced factor must be 1 or 2");
  const int din = d1 * d2;
  const int dout = (factor == 1) ? d2 : d1;
  const int count = (factor == 1) ? d1 : d2;
  std::vector<GeneralMatrix> kraus;
  for (int j = 0; j < count; ++j) {
    GeneralMatrix C(din, dout);
    for (int r = 0; r < dout; ++r) {
      const int row = (factor == 1) ? (j * d2 + r) : (r * d2 + j);
      C(row, r) = cd(1.0, 0.0);
    }
    kraus.push_back(std::move(C));
  }
  return make_cpmap(std::move(kraus));
}

CPMap tensor_with_identity(const CPMap& phi, int d) {
  if (d < 1) throw ShapeError("tensor_with_identity: d must be >= 1");
  const GeneralMatrix I = GeneralMatrix::identity(d);
  std::vector<GeneralMatrix> kraus;
  kraus.reserve(phi.kraus.size());
  for (const auto& C : phi.kraus) kraus.push_back(tensor(C, I));
  return make_cpmap(std::move(kraus));
}

CPMap random_cp(int dim_in, int dim_out, int rank, Normalization norm, rng::Stream& rng) {
  if (dim_in < 1 || dim_out < 1 || rank < 1)
    throw ConfigError("random_cp: dimensions and rank must be >= 1");
  std::vector<GeneralMatrix> kraus;
  const double scale = 1.0 / std::sqrt(static_cast<double>(rank));
  for (int a = 0; a < rank; ++a) {
    GeneralMatrix C = random_ginibre(dim_in, dim_out, rng);
    C *= cd(scale, 0.0);
    kraus.push_back(std::move(C));
  }
  if (norm != Normalization::none) {
    const bool left = (norm == Normalization::unital);
    CPMap draft;
    draft.dim_in = dim_in;
    draft.dim_out = dim_out;
    draft.kraus = kraus;
    const HermitianMatrix T = normalizer(draft, left);
    const auto ed = eigh(T);
    if (!(ed.eigenvalues.front() > 1e-12 * std::abs(ed.eigenvalues.back())) ||
        ed.eigenvalues.front() <= 0.0)
      throw SingularNormalization(
          "random_cp: normalizer is numerically singular (need rank * " +
          std::string(left ? "dim_in >= dim_out" : "dim_out >= dim_in") + ")");
    const HermitianMatrix X = apply_spectral(ScalarFn::inv_sqrt(), T);
    for (auto& C : kraus) C = left ? matmul(C, X.mat()) : matmul(X.mat(), C);
  }
  return make_cpmap(std::move(kraus));
}

}  // namespace opcheck
