#include <doctest.h>

#include <cmath>
#include <vector>

#include "opcheck/errors.hpp"
#include "opcheck/means.hpp"
#include "opcheck/perspective.hpp"
#include "test_util.hpp"

using opcheck::HermitianMatrix;
using opcheck::OperatorMapDescriptor;
using opcheck::random_pd;
using testutil::diag;

TEST_CASE("perspective closed forms on commuting operands") {
  const auto inv = opcheck::find_map("lift:inverse");
  // P_{t^-1}(A, B) = B A^-1 B.
  CHECK(testutil::frob_diff(perspective(inv, std::vector<HermitianMatrix>{diag({2, 5}),
                                                                          diag({4, 10})}),
                            diag({8, 20})) < 1e-12);
  // B = I restores the base map.
  opcheck::rng::Stream rng(3);
  const HermitianMatrix A = random_pd(3, 1e3, rng);
  CHECK(testutil::rel_diff(
            perspective(inv, std::vector<HermitianMatrix>{A, HermitianMatrix::identity(3)}),
            inv({A})) < 1e-11);
  // The negated square root: perspective is minus the geometric mean.
  const auto negsqrt = opcheck::find_map("lift:negpow:0.5");
  CHECK(testutil::frob_diff(
            perspective(negsqrt, std::vector<HermitianMatrix>{diag({4}), diag({9})}),
            diag({-6})) < 1e-12);
}

TEST_CASE("perspective matches the scalar perspective on 1x1 operands") {
  opcheck::rng::Stream rng(7);
  for (int t = 0; t < 20; ++t) {
    const double a = rng.uniform_pos() * 3 + 0.1;
    const double b = rng.uniform_pos() * 3 + 0.1;
    const auto sq = opcheck::find_map("lift:square");
    const auto inv = opcheck::find_map("lift:inverse");
    const double psq =
        perspective(sq, std::vector<HermitianMatrix>{diag({a}), diag({b})})(0, 0).real();
    const double pinv =
        perspective(inv, std::vector<HermitianMatrix>{diag({a}), diag({b})})(0, 0).real();
    CHECK(psq == doctest::Approx(b * (a / b) * (a / b)).epsilon(1e-10));
    CHECK(pinv == doctest::Approx(b * (b / a)).epsilon(1e-10));
  }
}

TEST_CASE("perspective is jointly homogeneous") {
  opcheck::rng::Stream rng(13);
  for (const char* name : {"lift:inverse", "lift:xlogx", "negmean:binary:0.5"}) {
    const auto base = opcheck::find_map(name);
    std::vector<HermitianMatrix> args;
    for (int i = 0; i < base.arity + 1; ++i) args.push_back(random_pd(3, 1e3, rng));
    const HermitianMatrix P = perspective(base, args);
    for (double t : {0.5, 3.0}) {
      std::vector<HermitianMatrix> scaled;
      for (const auto& a : args) scaled.push_back(t * a);
      CHECK_MESSAGE(testutil::frob_diff(perspective(base, scaled), t * P) <=
                        1e-9 * (1.0 + t * P.frobenius_norm()),
                    name << " t=" << t);
    }
  }
}

TEST_CASE("perspective descriptor carries the right metadata") {
  const auto base = opcheck::find_map("lift:inverse");
  const auto pd = perspective_descriptor(base);
  CHECK(pd.arity == 2);
  CHECK(pd.homogeneous);
  CHECK(pd.domain == opcheck::SpectralDomain::pd);
  CHECK(pd.curvature == OperatorMapDescriptor::Curvature::convex);
  CHECK(pd.name == "persp:lift:inverse");
  CHECK(opcheck::find_map("persp:negmean:karcher:3").residual_tol == opcheck::kKarcherTol);
}

TEST_CASE("restriction inverts the perspective on homogeneous maps") {
  opcheck::rng::Stream rng(21);

  // restrict(P_F)(args) = P_F(args, I) = F(args) for any base F.
  const auto base = opcheck::find_map("lift:xlogx");
  const auto pf = perspective_descriptor(base);
  const HermitianMatrix A = random_pd(3, 1e3, rng);
  CHECK(testutil::rel_diff(restriction(pf, std::vector<HermitianMatrix>{A}), base({A})) <
        1e-9);

  // For a homogeneous (k+1)-ary map, the perspective of its restriction
  // is the map itself.
  const auto mean3 = opcheck::find_map("negmean:inductive:3");
  std::vector<HermitianMatrix> args{random_pd(3, 1e3, rng), random_pd(3, 1e3, rng),
                                    random_pd(3, 1e3, rng)};
  OperatorMapDescriptor restricted = mean3;
  restricted.arity = 2;
  restricted.evaluate = [mean3](std::span<const HermitianMatrix> a) {
    return restriction(mean3, a);
  };
  CHECK(testutil::rel_diff(
            perspective(restricted, args),
            mean3(args)) < 1e-9);

  CHECK_THROWS_AS(restriction(opcheck::find_map("lift:square"),
                              std::vector<HermitianMatrix>{}),
                  opcheck::FlagViolation);
}

TEST_CASE("perspective rejects non-PD weights") {
  const auto inv = opcheck::find_map("lift:inverse");
  CHECK_THROWS_AS(
      perspective(inv, std::vector<HermitianMatrix>{diag({1, 2}), diag({1, 0})}),
      opcheck::DomainViolation);
}
