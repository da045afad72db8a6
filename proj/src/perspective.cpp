#include "opcheck/perspective.hpp"

#include <string>
#include <vector>

#include "opcheck/errors.hpp"

namespace opcheck {

HermitianMatrix perspective(const OperatorMapDescriptor& F,
                            std::span<const HermitianMatrix> args) {
  if (static_cast<int>(args.size()) != F.arity + 1)
    throw ShapeError("perspective of '" + F.name + "' takes " + std::to_string(F.arity + 1) +
                     " operands, got " + std::to_string(args.size()));
  const HermitianMatrix& B = args.back();
  for (const auto& a : args)
    if (a.dim() != B.dim()) throw ShapeError("perspective: operands of mixed dimension");

  const HermitianMatrix Bh = apply_spectral(ScalarFn::sqrt(), B);
  const HermitianMatrix Bih = apply_spectral(ScalarFn::inv_sqrt(), B);
  std::vector<HermitianMatrix> M;
  M.reserve(args.size() - 1);
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    M.push_back(congruence(args[i], Bih.mat()));
  return congruence(F(M), Bh.mat());
}

HermitianMatrix restriction(const OperatorMapDescriptor& F,
                            std::span<const HermitianMatrix> args) {
  if (!F.homogeneous)
    throw FlagViolation("restriction: '" + F.name + "' is not flagged homogeneous");
  if (static_cast<int>(args.size()) != F.arity - 1)
    throw ShapeError("restriction of '" + F.name + "' takes " + std::to_string(F.arity - 1) +
                     " operands, got " + std::to_string(args.size()));
  if (args.empty()) throw EmptyInput("restriction: no operands");
  std::vector<HermitianMatrix> full(args.begin(), args.end());
  full.push_back(HermitianMatrix::identity(args.front().dim()));
  return F(full);
}

OperatorMapDescriptor perspective_descriptor(const OperatorMapDescriptor& base) {
  OperatorMapDescriptor d;
  d.name = "persp:" + base.name;
  d.arity = base.arity + 1;
  d.curvature = base.curvature;
  d.homogeneous = true;
  d.domain = SpectralDomain::pd;
  d.zero_value_nonpositive = false;
  d.residual_tol = base.residual_tol;
  d.evaluate = [base](std::span<const HermitianMatrix> args) {
    return perspective(base, args);
  };
  return d;
}

}  // namespace opcheck
