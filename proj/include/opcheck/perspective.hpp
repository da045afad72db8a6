#ifndef OPCHECK_PERSPECTIVE_HPP
#define OPCHECK_PERSPECTIVE_HPP

#include <span>

#include "opcheck/regular_maps.hpp"

namespace opcheck {

/// Operator perspective of F: with B the last argument,
/// P_F(A_1, ..., A_k, B) = B^{1/2} F(B^{-1/2} A_1 B^{-1/2}, ...) B^{1/2}.
/// B must be PD; the A_i must satisfy F's own domain.
HermitianMatrix perspective(const OperatorMapDescriptor& F,
                            std::span<const HermitianMatrix> args);

/// Restriction of a homogeneous map: G(A_1, ..., A_{k-1}) =
/// F(A_1, ..., A_{k-1}, I).  Throws FlagViolation unless F.homogeneous.
HermitianMatrix restriction(const OperatorMapDescriptor& F,
                            std::span<const HermitianMatrix> args);

/// Descriptor for P_F: arity F.arity + 1, homogeneous, PD domain,
/// curvature and residual tolerance inherited from the base map.
OperatorMapDescriptor perspective_descriptor(const OperatorMapDescriptor& base);

}  // namespace opcheck

#endif  // OPCHECK_PERSPECTIVE_HPP
