#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "opcheck/errors.hpp"
#include "opcheck/hermitian.hpp"
#include "test_util.hpp"

using opcheck::cd;
using opcheck::GeneralMatrix;
using opcheck::HermitianMatrix;
using opcheck::random_contraction;
using opcheck::random_ginibre;
using opcheck::random_hermitian;
using opcheck::random_pd;
using opcheck::random_psd_rank;
using opcheck::random_unitary;
using testutil::diag;

namespace {

HermitianMatrix reconstruct(const opcheck::SpectralDecomposition& ed) {
  const int n = ed.vectors.rows();
  GeneralMatrix scaled = ed.vectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= ed.eigenvalues[j];
  return HermitianMatrix::from_general(matmul_adjoint_right(scaled, ed.vectors));
}

}  // namespace

TEST_CASE("eigh on known 2x2 matrices") {
  HermitianMatrix H(2);
  H.set(0, 0, 2.0);
  H.set(1, 1, 2.0);
  H.set(0, 1, 1.0);
  auto ed = eigh(H);
  CHECK(ed.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ed.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));

  // Complex off-diagonal: [[2, i], [-i, 2]] has the same spectrum.
  H.set(0, 1, cd(0, 1));
  ed = eigh(H);
  CHECK(ed.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ed.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eigh reconstructs and is orthonormal on random matrices") {
  opcheck::rng::Stream rng(11);
  for (int dim : {1, 2, 5, 9, 16}) {
    const HermitianMatrix H = random_hermitian(dim, rng);
    const auto ed = eigh(H);
    CHECK(testutil::frob_diff(reconstruct(ed), H) <= 1e-12 * (1.0 + H.frobenius_norm()));
    const GeneralMatrix gram = matmul_adjoint_left(ed.vectors, ed.vectors);
    CHECK(testutil::frob_diff(gram, GeneralMatrix::identity(dim)) < 1e-13 * dim);
    CHECK(std::is_sorted(ed.eigenvalues.begin(), ed.eigenvalues.end()));
  }
}

TEST_CASE("loewner comparison and the incomparable pair") {
  const auto v = loewner_geq(diag({2, 1}), diag({1, 2}), 1e-9);
  CHECK(!v.holds);
  CHECK(v.min_slack == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(v.witness.size() == 2);

  CHECK(loewner_geq(diag({2, 3}), diag({1, 2}), 1e-9).holds);
  CHECK(loewner_geq(diag({1, 1}), diag({1, 1}), 1e-12).holds);
  CHECK(opcheck::effective_tolerance(1e-10, 1e-9, diag({4, 1}), diag({2, 1})) ==
        doctest::Approx(1e-10 + 4e-9).epsilon(1e-12));
}

TEST_CASE("spectral calculus round trips") {
  opcheck::rng::Stream rng(5);
  for (int dim : {2, 4, 6}) {
    const HermitianMatrix H = random_pd(dim, 1e3, rng);
    const HermitianMatrix Hinv = apply_spectral(opcheck::ScalarFn::inverse(), H);
    const GeneralMatrix prod = matmul(Hinv.mat(), H.mat());
    CHECK(testutil::frob_diff(prod, GeneralMatrix::identity(dim)) < 1e-10);

    const HermitianMatrix S = apply_spectral(opcheck::ScalarFn::sqrt(), H);
    CHECK(testutil::frob_diff(HermitianMatrix::from_general(matmul(S.mat(), S.mat())), H) <
          1e-10);

    const HermitianMatrix L = apply_spectral(opcheck::ScalarFn::log(), H);
    CHECK(testutil::frob_diff(apply_spectral(opcheck::ScalarFn::exp(), L), H) < 1e-10);
  }
}

TEST_CASE("spectral domains reject and clamp correctly") {
  // Inverse of a singular matrix is rejected.
  CHECK_THROWS_AS(apply_spectral(opcheck::ScalarFn::inverse(), diag({1.0, 0.0})),
                  opcheck::DomainViolation);
  CHECK_THROWS_AS(apply_spectral(opcheck::ScalarFn::log(), diag({1.0, 0.0})),
                  opcheck::DomainViolation);
  // sqrt clamps roundoff-negative eigenvalues but rejects genuine ones.
  const HermitianMatrix ok = apply_spectral(opcheck::ScalarFn::sqrt(), diag({1.0, -1e-13}));
  CHECK(ok.frobenius_norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(apply_spectral(opcheck::ScalarFn::sqrt(), diag({1.0, -1e-6})),
                  opcheck::DomainViolation);
  // Fractional negative powers need strict positive definiteness.
  CHECK_THROWS_AS(apply_spectral(opcheck::ScalarFn::power(-0.5), diag({1.0, 0.0})),
                  opcheck::DomainViolation);
}

TEST_CASE("congruence preserves positivity and shapes") {
  opcheck::rng::Stream rng(17);
  const HermitianMatrix X = random_psd_rank(4, 3, rng);
  const GeneralMatrix C = random_ginibre(4, 2, rng);
  const HermitianMatrix Y = congruence(X, C);
  CHECK(Y.dim() == 2);
  CHECK(eigh(Y).eigenvalues.front() >= -1e-12);
  CHECK_THROWS_AS(congruence(X, random_ginibre(3, 2, rng)), opcheck::ShapeError);
}

TEST_CASE("hermitian tensor product") {
  const HermitianMatrix T = tensor(diag({1, 2}), diag({3, 4}));
  CHECK(T.dim() == 4);
  CHECK(std::abs(T(0, 0) - cd(3, 0)) < 1e-15);
  CHECK(std::abs(T(3, 3) - cd(8, 0)) < 1e-15);
}

TEST_CASE("random generators hit their contracts") {
  opcheck::rng::Stream rng(23);

  const GeneralMatrix U = random_unitary(5, rng);
  CHECK(testutil::frob_diff(matmul_adjoint_left(U, U), GeneralMatrix::identity(5)) < 1e-13);

  const HermitianMatrix P = random_pd(5, 1e3, rng);
  const auto ev = eigh(P).eigenvalues;
  CHECK(ev.front() > 0.0);
  CHECK(ev.back() / ev.front() <= 1e3 * (1 + 1e-12));
  CHECK(ev.back() <= 1.0 + 1e-12);

  const GeneralMatrix K = random_contraction(4, 3, rng);
  const HermitianMatrix G = HermitianMatrix::from_general(matmul_adjoint_left(K, K));
  CHECK(eigh(G).eigenvalues.back() < 1.0);

  const HermitianMatrix R = random_psd_rank(5, 2, rng);
  const auto rev = eigh(R).eigenvalues;
  int positive = 0;
  for (double x : rev)
    if (x > 1e-10) ++positive;
  CHECK(positive == 2);
  CHECK(rev.back() == doctest::Approx(1.0).epsilon(1e-10));  // unit spectral norm
}

TEST_CASE("streams are deterministic and substreams are independent") {
  opcheck::rng::Stream a(99), b(99);
  for (int i = 0; i < 8; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(opcheck::rng::derive_seed(1, 0) != opcheck::rng::derive_seed(1, 1));
  CHECK(opcheck::rng::derive_seed(1, 0) != opcheck::rng::derive_seed(2, 0));
}
