#include <doctest.h>

#include "helpers.hpp"

using namespace hkt;

TEST_CASE("identity system returns the right-hand side") {
  std::mt19937 rng(3);
  Vec b = testing::randomVector(rng, 5);
  auto res = linearSolve(Mat::Identity(5, 5), b);
  REQUIRE(res.kind == SolveKind::Unique);
  CHECK(res.particular == b);
}

TEST_CASE("zero system with zero rhs has a full solution space") {
  Mat A = Mat::Constant(2, 2, Scalar(0));
  Vec b = Vec::Constant(2, Scalar(0));
  auto res = linearSolve(A, b);
  REQUIRE(res.kind == SolveKind::Underdetermined);
  CHECK(res.solutionDim() == 2);
}

TEST_CASE("inconsistent system is detected") {
  Mat A(2, 1);
  A << Scalar(1), Scalar(1);
  Vec b(2);
  b << Scalar(1), Scalar(2);
  CHECK(linearSolve(A, b).kind == SolveKind::Inconsistent);
}

TEST_CASE("solve recovers the preimage for random invertible systems") {
  std::mt19937 rng(19);
  int solved = 0;
  while (solved < 25) {
    Mat A = testing::randomMatrix(rng, 4, 4);
    if (determinant(A).isZero()) continue;
    Vec x = testing::randomVector(rng, 4);
    auto res = linearSolve(A, Vec(A * x));
    REQUIRE(res.kind == SolveKind::Unique);
    CHECK(res.particular == x);
    ++solved;
  }
}

TEST_CASE("elimination transform reproduces the input exactly") {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    Mat A = testing::randomMatrix(rng, 5, 3);
    auto ef = echelon<Scalar>(A, /*wantTransform=*/true);
    CHECK(isZero(Mat(ef.transform * A - ef.R)));
    // the transform is invertible, so the reduction loses nothing
    CHECK(rankOf(ef.transform) == 5);
  }
}

TEST_CASE("nullspace vectors are genuine solutions") {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    Mat A = testing::randomMatrix(rng, 3, 5);
    Mat K = nullspace(A);
    CHECK(K.cols() + rankOf(A) == 5);
    CHECK(isZero(Mat(A * K)));
  }
}

TEST_CASE("inverse agrees with the determinant") {
  std::mt19937 rng(31);
  int done = 0;
  while (done < 10) {
    Mat A = testing::randomMatrix(rng, 4, 4);
    auto inv = inverseOf(A);
    if (determinant(A).isZero()) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(isZero(Mat(A * *inv - Mat::Identity(4, 4))));
    ++done;
  }
  CHECK_FALSE(inverseOf(Mat::Constant(3, 3, Scalar(1))).has_value());
}

TEST_CASE("span closure of the identity alone") {
  auto basis = spanClosure({Mat::Identity(4, 4)}, commutator);
  CHECK(basis.size() == 1);
}

TEST_CASE("span closure with no generators") {
  CHECK(spanClosure({}, commutator).empty());
}

TEST_CASE("commutator closure of two centralizer generators") {
  // J'_1, J'_2 of the abelian-hypercomplex family; their commutator is an
  // independent third operator, checked directly by matrix arithmetic.
  Mat jp1 = Mat::Constant(4, 4, Scalar(0));
  jp1(3, 0) = Scalar(1);
  jp1(2, 1) = Scalar(1);
  jp1(1, 2) = Scalar(-1);
  jp1(0, 3) = Scalar(-1);
  Mat jp2 = Mat::Constant(4, 4, Scalar(0));
  jp2(1, 0) = Scalar(-1);
  jp2(0, 1) = Scalar(1);
  jp2(3, 2) = Scalar(-1);
  jp2(2, 3) = Scalar(1);
  Mat jp3 = Mat::Constant(4, 4, Scalar(0));
  jp3(2, 0) = Scalar(-1);
  jp3(3, 1) = Scalar(1);
  jp3(0, 2) = Scalar(1);
  jp3(1, 3) = Scalar(-1);

  // direct check of the independent oracle
  CHECK(isZero(Mat(commutator(jp1, jp2) - Scalar(2) * jp3)));

  auto basis = spanClosure({jp1, jp2}, commutator);
  CHECK(basis.size() == 3);
  IncrementalSpan span(16);
  for (const Mat& m : basis) span.insert(flatten(m));
  CHECK(span.contains(flatten(jp3)));

  // idempotence: closing the closure changes nothing
  auto again = spanClosure(basis, commutator);
  CHECK(again.size() == basis.size());
}

TEST_CASE("mixed dimensions are rejected") {
  CHECK_THROWS_AS(spanClosure({Mat::Identity(2, 2), Mat::Identity(3, 3)}, commutator),
                  DimensionMismatch);
  CHECK_THROWS_AS(linearSolve(Mat::Identity(2, 2), Vec::Constant(3, Scalar(0))),
                  DimensionMismatch);
}
