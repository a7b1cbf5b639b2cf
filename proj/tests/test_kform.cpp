#include <doctest.h>

#include "helpers.hpp"

using namespace hkt;

TEST_CASE("wedge of basis covectors") {
  KForm e1 = KForm::monomial(4, {1});
  KForm e2 = KForm::monomial(4, {2});
  CHECK(wedge(e1, e2) == KForm::monomial(4, {1, 2}));
  CHECK(wedge(e1, e1).isZeroForm());
}

TEST_CASE("wedge is graded-commutative and bilinear") {
  std::mt19937 rng(13);
  for (int t = 0; t < 25; ++t) {
    KForm a = testing::randomForm(rng, 6, 1);
    KForm b = testing::randomForm(rng, 6, 2);
    KForm c = testing::randomForm(rng, 6, 2);
    CHECK(wedge(a, b) == wedge(b, a));  // (-1)^{1*2} = +1
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Scalar s = testing::randomScalar(rng);
    CHECK(wedge(s * a, b) == s * wedge(a, b));
    CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
  }
  // explicit sign checks
  KForm a1 = KForm::monomial(5, {1});
  KForm b2 = KForm::monomial(5, {2, 3});
  KForm c1 = KForm::monomial(5, {4});
  CHECK(wedge(a1, b2) == wedge(b2, a1));                 // (-1)^{1*2} = +1
  CHECK(wedge(a1, c1) == Scalar(-1) * wedge(c1, a1));    // (-1)^{1*1} = -1
}

TEST_CASE("evaluation changes by the permutation sign") {
  std::mt19937 rng(17);
  KForm f = testing::randomForm(rng, 5, 3);
  for (int t = 0; t < 10; ++t) {
    std::vector<Vec> args = {testing::randomVector(rng, 5), testing::randomVector(rng, 5),
                             testing::randomVector(rng, 5)};
    Scalar v = f(args);
    std::vector<Vec> swapped = {args[1], args[0], args[2]};
    CHECK(f(swapped) == -v);
    std::vector<Vec> cycled = {args[2], args[0], args[1]};
    CHECK(f(cycled) == v);
    std::vector<Vec> repeated = {args[0], args[0], args[2]};
    CHECK(f(repeated) == Scalar(0));
  }
}

TEST_CASE("differential of a basis covector on sp(1) + u(1)") {
  LieAlgebra g = builtin("sp1_u1").structure.algebra;
  // d e^3 (e1, e2) = -e^3([e1, e2]) = -1, frozen by hand evaluation
  KForm de3 = ceDifferential(KForm::monomial(4, {3}), g);
  CHECK(de3 == KForm::monomial(4, {1, 2}, Scalar(-1)));
}

TEST_CASE("differential of the first Kaehler form on the doubled plane algebra") {
  CatalogEntry e = builtin("e2_tangent");
  KForm omega1 = e.structure.kaehlerForm(0);
  CHECK(omega1.str() == "e^{12} + e^{34} - e^{56} - e^{78}");
  // hand evaluation: the only surviving monomial comes from d(e^{56})
  KForm domega = ceDifferential(omega1, e.structure.algebra);
  CHECK(domega == KForm::monomial(8, {1, 5, 6}, Scalar(2)));
}

TEST_CASE("d o d = 0 on every catalog algebra") {
  std::mt19937 rng(41);
  for (const auto& name : builtinNames()) {
    LieAlgebra g = builtin(name).structure.algebra;
    INFO(name);
    for (int deg = 1; deg <= 3; ++deg) {
      KForm f = testing::randomForm(rng, g.dim(), deg);
      CHECK(ceDifferential(ceDifferential(f, g), g).isZeroForm());
    }
  }
}

TEST_CASE("degree overflow yields the zero form") {
  LieAlgebra g = builtin("sp1_u1").structure.algebra;
  KForm top = KForm::monomial(4, {1, 2, 3, 4});
  CHECK(ceDifferential(top, g).isZeroForm());
  CHECK(wedge(top, KForm::monomial(4, {1})).isZeroForm());
}

TEST_CASE("wedge-power diagnostic for balancedness") {
  // The doubled plane algebra is not balanced: d(omega1^3) != 0.
  CatalogEntry e2 = builtin("e2_tangent");
  KForm w = e2.structure.kaehlerForm(0);
  KForm w3 = wedge(wedge(w, w), w);
  CHECK_FALSE(w3.isZeroForm());
  CHECK_FALSE(ceDifferential(w3, e2.structure.algebra).isZeroForm());

  // The Heisenberg-type entry is balanced and its wedge power is closed.
  CatalogEntry h8 = builtin("heis8");
  KForm v = h8.structure.kaehlerForm(0);
  KForm v3 = wedge(wedge(v, v), v);
  CHECK_FALSE(v3.isZeroForm());
  CHECK(ceDifferential(v3, h8.structure.algebra).isZeroForm());
}

TEST_CASE("pullback along an endomorphism") {
  CatalogEntry e = builtin("heis8");
  const Endo& j1 = e.structure.J[0];
  KForm omega = e.structure.kaehlerForm(0);
  // omega(J., J.) = omega for a compatible pair
  CHECK(pullback(omega, j1) == omega);
  // pulling back twice along J is the identity on 2-forms
  std::mt19937 rng(43);
  KForm f = testing::randomForm(rng, 8, 2);
  CHECK(pullback(pullback(f, j1), j1) == f);
}

TEST_CASE("monomial rendering uses increasing indices") {
  KForm f(12, 2);
  f.add({10, 2}, Scalar(1));
  f.add({1, 5}, Scalar::fraction(-1, 2));
  CHECK(f.str() == "-1/2*e^{1 5} - e^{2 10}");
  CHECK(KForm::zero(4, 2).str() == "0");
}
