#include <doctest.h>

#include "helpers.hpp"

using namespace hkt;

TEST_CASE("abelian algebras satisfy Jacobi") {
  LieAlgebra g(4);
  auto rep = g.jacobiDefect();
  CHECK(rep.ok());
  CHECK(rep.worst == Scalar(0));
  CHECK(g.isAbelian());
}

TEST_CASE("catalog algebras satisfy Jacobi") {
  for (const auto& name : builtinNames()) {
    CatalogEntry e = builtin(name);
    INFO(name);
    CHECK(e.structure.algebra.jacobiDefect().ok());
  }
}

TEST_CASE("a truncated bracket table fails Jacobi with a witness") {
  // [e1,e2] = e2 and [e2,e3] = e1 without any completing brackets
  LieAlgebra g(4);
  g.addBracketTerm(1, 2, 2, Scalar(1));
  g.addBracketTerm(2, 3, 1, Scalar(1));
  auto rep = g.jacobiDefect();
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.worst == Scalar(1));
  CHECK(*rep.witness == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  LieAlgebra g = builtin("sp1_u1").structure.algebra;
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Vec x = testing::randomVector(rng, 4);
    Vec y = testing::randomVector(rng, 4);
    Vec z = testing::randomVector(rng, 4);
    Scalar c = testing::randomScalar(rng);
    CHECK(g.bracket(x, y) == Vec(-g.bracket(y, x)));
    CHECK(g.bracket(x + c * y, z) == Vec(g.bracket(x, z) + c * g.bracket(y, z)));
    CHECK(isZero(g.bracket(x, x)));
  }
}

TEST_CASE("basis brackets match the stored structure constants") {
  LieAlgebra g = builtin("heis8").structure.algebra;
  CHECK(g.bracketBasis(5, 6) == g.basisVec(2));
  CHECK(g.bracketBasis(6, 5) == Vec(-g.basisVec(2)));
  CHECK(g.bracketBasis(6, 7) == Vec(-g.basisVec(4)));
  CHECK(isZero(g.bracketBasis(1, 2)));
  CHECK(isZero(g.bracketBasis(3, 3)));
}

TEST_CASE("structure constant listing is canonical") {
  LieAlgebra g(3);
  g.addBracketTerm(1, 2, 3, Scalar(1));
  g.addBracketTerm(1, 2, 3, Scalar(-1));  // cancels to zero
  g.addBracketTerm(1, 3, 2, Scalar::fraction(1, 2));
  auto sc = g.structureConstants();
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].first == std::pair<int, int>{1, 3});
  CHECK(sc[0].second.size() == 1);
  CHECK(sc[0].second[0] == std::pair<int, Scalar>{2, Scalar::fraction(1, 2)});
}

TEST_CASE("index bounds are enforced") {
  LieAlgebra g(3);
  CHECK_THROWS_AS(g.addBracketTerm(0, 2, 1, Scalar(1)), DimensionMismatch);
  CHECK_THROWS_AS(g.addBracketTerm(2, 2, 1, Scalar(1)), DimensionMismatch);
  CHECK_THROWS_AS(g.addBracketTerm(1, 4, 1, Scalar(1)), DimensionMismatch);
  CHECK_THROWS_AS(g.bracketBasis(1, 5), DimensionMismatch);
}
