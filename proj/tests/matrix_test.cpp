#include <doctest.h>

#include <limits>

#include "opcheck/errors.hpp"
#include "opcheck/matrix.hpp"
#include "test_util.hpp"

using opcheck::cd;
using opcheck::GeneralMatrix;

TEST_CASE("matmul and adjoint products") {
  GeneralMatrix A(2, 3), B(3, 2);
  int v = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) A(i, j) = cd(v++, i - j);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) B(i, j) = cd(j - i, v++);

  const GeneralMatrix C = matmul(A, B);
  CHECK(C.rows() == 2);
  CHECK(C.cols() == 2);
  CHECK(testutil::frob_diff(matmul_adjoint_left(A, C), matmul(A.adjoint(), C)) < 1e-13);
  CHECK(testutil::frob_diff(matmul_adjoint_right(B, C), matmul(B, C.adjoint())) < 1e-13);

  CHECK_THROWS_AS(matmul(A, A), opcheck::ShapeError);
  CHECK_THROWS_AS(matmul_adjoint_left(B, A), opcheck::ShapeError);
}

TEST_CASE("identity and scaling behave") {
  const GeneralMatrix I = GeneralMatrix::identity(3);
  GeneralMatrix A(3, 3);
  A(0, 1) = cd(2, -1);
  A(2, 0) = cd(0, 3);
  CHECK(testutil::frob_diff(matmul(I, A), A) == 0.0);
  CHECK(testutil::frob_diff(matmul(A, I), A) == 0.0);
  CHECK(testutil::frob_diff(cd(2, 0) * A, A + A) < 1e-15);
}

TEST_CASE("kronecker product structure") {
  GeneralMatrix A(2, 2), B(2, 2);
  A(0, 0) = 1;
  A(0, 1) = 2;
  A(1, 0) = 3;
  A(1, 1) = 4;
  B(0, 0) = cd(0, 1);
  B(1, 1) = 5;
  const GeneralMatrix T = tensor(A, B);
  CHECK(T.rows() == 4);
  CHECK(std::abs(T(0, 0) - cd(0, 1)) < 1e-15);   // A(0,0)*B(0,0)
  CHECK(std::abs(T(1, 1) - cd(5, 0)) < 1e-15);   // A(0,0)*B(1,1)
  CHECK(std::abs(T(2, 1) - cd(0, 0)) < 1e-15);   // A(1,0)*B(0,1) = 0
  CHECK(std::abs(T(3, 3) - cd(20, 0)) < 1e-15);  // A(1,1)*B(1,1)
  // Mixed-product identity (Kronecker is multiplicative).
  const GeneralMatrix lhs = tensor(matmul(A, A), matmul(B, B));
  const GeneralMatrix rhs = matmul(tensor(A, B), tensor(A, B));
  CHECK(testutil::frob_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("frobenius norm and finiteness") {
  GeneralMatrix A(1, 2);
  A(0, 0) = cd(3, 0);
  A(0, 1) = cd(0, 4);
  CHECK(A.frobenius_norm() == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(A.all_finite());
  A(0, 1) = cd(std::numeric_limits<double>::infinity(), 0);
  CHECK(!A.all_finite());
}
