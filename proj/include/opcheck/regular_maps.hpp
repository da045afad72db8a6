#ifndef OPCHECK_REGULAR_MAPS_HPP
#define OPCHECK_REGULAR_MAPS_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "opcheck/hermitian.hpp"

namespace opcheck {

/// A regular operator map F of fixed arity together with the structural
/// flags the verification suites key on.  Maps are built from specifier
/// strings (see find_map) or assembled directly in tests.
struct OperatorMapDescriptor {
  std::string name;
  int arity = 1;

  enum class Curvature { convex, concave };
  Curvature curvature = Curvature::convex;

  /// F(t A_1, ..., t A_k) = t F(A_1, ..., A_k) for t > 0.
  bool homogeneous = false;

  /// Largest domain the map is defined on (psd admits singular operands,
  /// pd does not).
  SpectralDomain domain = SpectralDomain::psd;

  /// F(0, ..., 0) <= 0 (required by the contraction form of the Jensen
  /// inequality; meaningful only for psd-domain maps).
  bool zero_value_nonpositive = false;

  /// The spectral function has a bounded derivative at 0, so operands
  /// touching the PSD boundary are numerically safe.  False for maps
  /// like t -> -t^a (a < 1), where kernel eigenvalues recovered as
  /// O(eps) roundoff get amplified to eps^a; randomized suites keep
  /// operands of such maps strictly PD.
  bool boundary_stable = true;

  /// Residual tolerance of an iterative fixed point backing the map
  /// (zero for closed-form maps); slack tolerances are widened by
  /// 10 * residual_tol * dim where such a map is involved.
  double residual_tol = 0.0;

  std::function<HermitianMatrix(std::span<const HermitianMatrix>)> evaluate;

  /// Evaluate with arity/shape checks.
  HermitianMatrix operator()(std::span<const HermitianMatrix> args) const;
  HermitianMatrix operator()(std::initializer_list<HermitianMatrix> args) const;
};

/// Parse a map specifier:
///   lift:square | lift:power:<p> | lift:inverse | lift:negpow:<a> |
///   lift:xlogx | sum:<lift>+<lift>+... | negmean:binary:<a> |
///   negmean:inductive[:n] | negmean:karcher[:n] | lr:basic |
///   lr:n:<mean>[:n] | lr:weighted:<a> | persp:<base>
/// with p in [1,2] and a in (0,1).  Throws ConfigError on anything else.
OperatorMapDescriptor find_map(const std::string& spec);

/// The default catalog the convexity and Jensen suites iterate over.
const std::vector<OperatorMapDescriptor>& catalog();

struct CurvatureProbe {
  int trials = 0;
  int failures = 0;
  double worst_slack = 0.0;
};

/// Randomized midpoint-convexity probe: samples operand tuples X, Y and
/// a uniform weight, then checks the curvature inequality in the Loewner
/// order.  For psd-domain maps every fourth trial uses singular PSD
/// operands.
CurvatureProbe probe_curvature(const OperatorMapDescriptor& F, int dim, int trials,
                               std::uint64_t seed, double tol_abs = kDefaultTolAbs,
                               double tol_rel = kDefaultTolRel, double cond_cap = 1e3);

}  // namespace opcheck

#endif  // OPCHECK_REGULAR_MAPS_HPP
