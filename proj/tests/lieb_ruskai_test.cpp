#include <doctest.h>

#include <vector>

#include "opcheck/errors.hpp"
#include "opcheck/lieb_ruskai.hpp"
#include "test_util.hpp"

using opcheck::cd;
using opcheck::GeneralMatrix;
using opcheck::HermitianMatrix;
using opcheck::MeanSpec;
using opcheck::random_ginibre;
using opcheck::random_pd;
using testutil::diag;

TEST_CASE("lr_basic frozen values") {
  const HermitianMatrix A = diag({2, 4});
  GeneralMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  // Swap conjugation permutes the inverse's diagonal.
  CHECK(testutil::frob_diff(lr_basic(A, swap), diag({0.25, 0.5})) < 1e-14);
  CHECK(testutil::frob_diff(lr_basic(A, GeneralMatrix::identity(2)), diag({0.5, 0.25})) < 1e-14);

  CHECK_THROWS_AS(lr_basic(A, GeneralMatrix(3, 2)), opcheck::ShapeError);
  CHECK_THROWS_AS(lr_basic(diag({1, 0}), swap), opcheck::DomainViolation);
}

TEST_CASE("lr_n collapses to the basic form on identical operands") {
  opcheck::rng::Stream rng(11);
  const HermitianMatrix A = random_pd(3, 1e2, rng);
  const HermitianMatrix C = random_pd(3, 1e2, rng);
  const HermitianMatrix want = congruence(apply_spectral(opcheck::ScalarFn::inverse(), A), C.mat());
  for (const char* m : {"binary:0.5", "inductive:3", "karcher:3"}) {
    const MeanSpec spec = MeanSpec::parse(m);
    const std::vector<HermitianMatrix> copies(static_cast<std::size_t>(spec.arity()), A);
    const HermitianMatrix got = lr_n(spec, copies, C);
    CHECK(testutil::rel_diff(got, want) < 1e-8);
  }
}

TEST_CASE("lr_n commuting frozen value") {
  // Geometric means of {4,9} and {4,1} are 6 and 2.
  const std::vector<HermitianMatrix> A{diag({4, 4}), diag({9, 1})};
  const HermitianMatrix got = lr_n(MeanSpec::parse("karcher:2"), A, HermitianMatrix::identity(2));
  CHECK(testutil::frob_diff(got, diag({1.0 / 6.0, 0.5})) < 1e-8);

  CHECK_THROWS_AS(lr_n(MeanSpec::parse("binary:0.5"), std::vector<HermitianMatrix>{},
                       HermitianMatrix::identity(2)),
                  opcheck::EmptyInput);
}

TEST_CASE("two-operand lr_n matches the weighted closed form") {
  opcheck::rng::Stream rng(13);
  for (int t = 0; t < 8; ++t) {
    const HermitianMatrix A = random_pd(4, 1e2, rng);
    const HermitianMatrix B = random_pd(4, 1e2, rng);
    const HermitianMatrix C = random_pd(4, 1e2, rng);
    const std::vector<HermitianMatrix> ops{A, B};
    const HermitianMatrix closed = lr_weighted(0.5, A, B, C.mat());
    CHECK(testutil::rel_diff(lr_n(MeanSpec::parse("binary:0.5"), ops, C), closed) < 1e-9);
    CHECK(testutil::rel_diff(lr_n(MeanSpec::parse("karcher:2"), ops, C), closed) < 1e-8);
  }
}

TEST_CASE("lr_n is jointly homogeneous of degree one") {
  opcheck::rng::Stream rng(17);
  const std::vector<HermitianMatrix> pool{random_pd(3, 1e2, rng), random_pd(3, 1e2, rng),
                                          random_pd(3, 1e2, rng)};
  const HermitianMatrix C = random_pd(3, 1e2, rng);
  for (const char* m : {"binary:0.5", "inductive:3", "karcher:3"}) {
    const MeanSpec spec = MeanSpec::parse(m);
    const std::vector<HermitianMatrix> A(pool.begin(), pool.begin() + spec.arity());
    const double t = 2.5;
    std::vector<HermitianMatrix> tA;
    for (const auto& a : A) tA.push_back(t * a);
    const HermitianMatrix lhs = lr_n(spec, tA, t * C);
    const HermitianMatrix rhs = t * lr_n(spec, A, C);
    CHECK(testutil::rel_diff(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("lr_weighted endpoints and frozen scalars") {
  opcheck::rng::Stream rng(19);
  const HermitianMatrix A = random_pd(3, 1e2, rng);
  const HermitianMatrix B = random_pd(3, 1e2, rng);
  const GeneralMatrix C = random_ginibre(3, 3, rng);
  const auto inv = [](const HermitianMatrix& X) {
    return apply_spectral(opcheck::ScalarFn::inverse(), X);
  };

  CHECK(testutil::rel_diff(lr_weighted(1.0, A, B, C), congruence(inv(A), C)) < 1e-10);
  CHECK(testutil::rel_diff(lr_weighted(0.0, A, B, C), congruence(inv(B), C)) < 1e-10);
  CHECK(testutil::rel_diff(lr_weighted(0.5, A, A, C), congruence(inv(A), C)) < 1e-10);

  // Commuting scalars: 16^{-1/2} * 4^{-1/2} = 1/8.
  const HermitianMatrix s =
      lr_weighted(0.5, diag({16}), diag({4}), GeneralMatrix::identity(1));
  CHECK(s(0, 0).real() == doctest::Approx(0.125).epsilon(1e-12));

  CHECK_THROWS_AS(lr_weighted(1.5, A, B, C), opcheck::DomainViolation);
  CHECK_THROWS_AS(lr_weighted(0.5, A, diag({1, 1}), C), opcheck::ShapeError);
}

TEST_CASE("lr_weighted commuting reduction") {
  const HermitianMatrix A = diag({2, 5, 9});
  const HermitianMatrix B = diag({3, 4, 7});
  for (double alpha : {0.25, 0.5, 0.75}) {
    std::vector<double> want(3);
    for (int i = 0; i < 3; ++i)
      want[i] = std::pow(A(i, i).real(), -alpha) * std::pow(B(i, i).real(), -(1.0 - alpha));
    const HermitianMatrix got = lr_weighted(alpha, A, B, GeneralMatrix::identity(3));
    CHECK(testutil::frob_diff(got, diag(want)) < 1e-10);
  }
}

TEST_CASE("block embedding layout and positivity criterion") {
  GeneralMatrix K(2, 2);
  K(0, 1) = cd(3, 1);
  const HermitianMatrix blk = block_embed(diag({1, 2}), K);
  REQUIRE(blk.dim() == 4);
  CHECK(blk(0, 0) == cd(1, 0));
  CHECK(blk(3, 3) == cd(2, 0));
  CHECK(blk(0, 2) == cd(0, 0));
  CHECK(blk(1, 2) == std::conj(cd(3, 1)));  // (K^H)(1,0) = conj K(0,1)
  CHECK(blk(2, 1) == cd(3, 1));

  CHECK(testutil::frob_diff(block_embed(HermitianMatrix::identity(2), GeneralMatrix(2, 2)),
                            HermitianMatrix::identity(4)) == 0.0);

  // Scalar case [[1, 1/2], [1/2, 1]] has eigenvalues 1/2 and 3/2.
  GeneralMatrix half(1, 1);
  half(0, 0) = 0.5;
  const auto ev = eigh(block_embed(diag({1}), half)).eigenvalues;
  CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.5).epsilon(1e-12));

  // Schur criterion: the block is PSD exactly when A >= K A^{-1} K^H.
  opcheck::rng::Stream rng(23);
  const HermitianMatrix A = random_pd(3, 1e2, rng);
  CHECK(eigh(block_embed(A, A.mat())).eigenvalues.front() >= -1e-10);  // boundary case
  const HermitianMatrix bad = block_embed(HermitianMatrix::identity(2), 2.0 * GeneralMatrix::identity(2));
  CHECK(eigh(bad).eigenvalues.front() == doctest::Approx(-1.0).epsilon(1e-12));
}
