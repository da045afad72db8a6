#include "opcheck/means.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "opcheck/errors.hpp"

namespace opcheck {
namespace {

void check_operands(const char* op, std::span<const HermitianMatrix> A) {
  if (A.empty()) throw EmptyInput(std::string(op) + ": no operands");
  for (const auto& a : A)
    if (a.dim() != A.front().dim())
      throw ShapeError(std::string(op) + ": operands of mixed dimension");
}

}  // namespace

HermitianMatrix binary_geometric(double alpha, const HermitianMatrix& A,
                                 const HermitianMatrix& B) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainViolation("binary_geometric: alpha must be in [0,1], got " +
                          std::to_string(alpha));
  if (A.dim() != B.dim()) throw ShapeError("binary_geometric: operands of mixed dimension");
  const HermitianMatrix Bh = apply_spectral(ScalarFn::sqrt(), B);
  const HermitianMatrix Bih = apply_spectral(ScalarFn::inv_sqrt(), B);
  const HermitianMatrix M = congruence(A, Bih.mat());
  const HermitianMatrix Ma = map_spectrum(M, SpectralDomain::pd, "binary_geometric",
                                          [alpha](double x) { return std::pow(x, alpha); });
  return congruence(Ma, Bh.mat());
}

HermitianMatrix inductive_mean(std::span<const HermitianMatrix> A) {
  check_operands("inductive_mean", A);
  HermitianMatrix S = A[0];
  for (std::size_t k = 2; k <= A.size(); ++k)
    S = binary_geometric(1.0 / static_cast<double>(k), A[k - 1], S);
  return S;
}

double karcher_residual(std::span<const HermitianMatrix> A, const HermitianMatrix& X) {
  check_operands("karcher_residual", A);
  const HermitianMatrix Xih = apply_spectral(ScalarFn::inv_sqrt(), X);
  HermitianMatrix S(X.dim());
  for (const auto& Ai : A) S += apply_spectral(ScalarFn::log(), congruence(Ai, Xih.mat()));
  return S.frobenius_norm();
}

HermitianMatrix karcher_mean(std::span<const HermitianMatrix> A, double tol, int max_iter) {
  check_operands("karcher_mean", A);
  const int dim = A.front().dim();
  const double n = static_cast<double>(A.size());

  HermitianMatrix X(dim);
  for (const auto& Ai : A) X += Ai;
  X *= 1.0 / n;

  double residual = 0.0;
  for (int iter = 0;; ++iter) {
    const HermitianMatrix Xh = apply_spectral(ScalarFn::sqrt(), X);
    const HermitianMatrix Xih = apply_spectral(ScalarFn::inv_sqrt(), X);

    HermitianMatrix S(dim);
    double lbar = 0.0;
    for (const auto& Ai : A) {
      const HermitianMatrix Li =
          apply_spectral(ScalarFn::log(), congruence(Ai, Xih.mat()));
      const double d = Li.frobenius_norm();
      lbar += (d < 1e-8) ? 1.0 : d / std::tanh(d);
      S += Li;
    }
    lbar /= n;
    residual = S.frobenius_norm();
    if (residual <= tol) return X;
    if (iter >= max_iter)
      throw NonConvergence("karcher_mean: residual " + std::to_string(residual) +
                               " after " + std::to_string(max_iter) + " iterations",
                           residual);

    const double theta = std::min(1.0, 2.0 / (1.0 + lbar));
    S *= theta / n;
    const HermitianMatrix E = apply_spectral(ScalarFn::exp(), S);
    X = congruence(E, Xh.mat());
  }
}

std::string MeanSpec::name() const {
  switch (kind) {
    case Kind::binary:
      return "binary:" + std::to_string(alpha);
    case Kind::inductive:
      return "inductive:" + std::to_string(n);
    case Kind::karcher:
      return "karcher:" + std::to_string(n);
  }
  return "?";
}

MeanSpec MeanSpec::parse(const std::string& s) {
  auto bad = [&]() -> ConfigError {
    return ConfigError("unknown mean specifier '" + s +
                       "' (expected binary:<a> | inductive[:n] | karcher[:n])");
  };
  auto parse_n = [&](const std::string& t) {
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(t, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != t.size() || n < 1) throw bad();
    return n;
  };

  MeanSpec m;
  if (s.rfind("binary:", 0) == 0) {
    m.kind = Kind::binary;
    const std::string t = s.substr(7);
    std::size_t pos = 0;
    try {
      m.alpha = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != t.size() || !(m.alpha >= 0.0 && m.alpha <= 1.0))
      throw ConfigError("mean specifier '" + s + "': alpha must be in [0,1]");
    m.n = 2;
    return m;
  }
  for (const auto& [prefix, kind] :
       {std::pair<std::string, Kind>{"inductive", Kind::inductive},
        std::pair<std::string, Kind>{"karcher", Kind::karcher}}) {
    if (s == prefix) {
      m.kind = kind;
      m.n = 3;
      return m;
    }
    if (s.rfind(prefix + ":", 0) == 0) {
      m.kind = kind;
      m.n = parse_n(s.substr(prefix.size() + 1));
      return m;
    }
  }
  throw bad();
}

HermitianMatrix evaluate_mean(const MeanSpec& spec, std::span<const HermitianMatrix> A) {
  if (static_cast<int>(A.size()) != spec.arity())
    throw ShapeError("evaluate_mean: mean '" + spec.name() + "' takes " +
                     std::to_string(spec.arity()) + " operands, got " +
                     std::to_string(A.size()));
  switch (spec.kind) {
    case MeanSpec::Kind::binary:
      return binary_geometric(spec.alpha, A[0], A[1]);
    case MeanSpec::Kind::inductive:
      return inductive_mean(A);
    case MeanSpec::Kind::karcher:
      return karcher_mean(A, spec.karcher_tol, spec.karcher_max_iter);
  }
  throw ConfigError("evaluate_mean: invalid mean kind");
}

}  // namespace opcheck
