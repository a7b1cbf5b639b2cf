#include <doctest.h>

#include "helpers.hpp"

using namespace hkt;

namespace {

GeomStructure abelianFlat() {
  return GeomStructure{LieAlgebra(4), Metric{Mat::Identity(4, 4)},
                       {leftMult(0, 1), leftMult(1, 1), leftMult(2, 1)}};
}

// Independent re-evaluation of the Nijenhuis tensor, kept separate from the
// library routine on purpose.
Vec nijenhuisDirect(const Endo& J, const LieAlgebra& g, int i, int j) {
  Vec x = g.basisVec(i), y = g.basisVec(j);
  Vec jx = J * x, jy = J * y;
  return Vec(J * Vec(g.bracket(x, y) - g.bracket(jx, jy)) - g.bracket(jx, y) -
             g.bracket(x, jy));
}

}  // namespace

TEST_CASE("Nijenhuis tensor vanishes on abelian algebras") {
  GeomStructure s = abelianFlat();
  for (const Endo& j : s.J) CHECK(nijenhuis(j, s.algebra).empty());
}

TEST_CASE("the abelian-family J1 is integrable") {
  CatalogEntry e = builtin("aff_C");
  CHECK(nijenhuis(e.structure.J[0], e.structure.algebra).empty());
}

TEST_CASE("a broken J is caught with a witness") {
  CatalogEntry e = builtin("aff_C");
  // flip the sign of the e1 <-> e4 pair: still squares to -id
  Endo bad = e.structure.J[0];
  bad(3, 0) = Scalar(1);
  bad(0, 3) = Scalar(-1);
  CHECK(isZero(Mat(bad * bad + Mat::Identity(4, 4))));
  auto table = nijenhuis(bad, e.structure.algebra);
  REQUIRE_FALSE(table.empty());
  for (const auto& [pair, value] : table)
    CHECK(value == nijenhuisDirect(bad, e.structure.algebra, pair.first, pair.second));
}

TEST_CASE("J^2 != -id is rejected") {
  CHECK_THROWS_AS(nijenhuis(Mat::Identity(4, 4), LieAlgebra(4)), ValidationError);
}

TEST_CASE("hypercomplex check accepts the catalog triples") {
  for (const auto& name : builtinNames()) {
    CatalogEntry e = builtin(name);
    if (!e.structure.hasTriple()) continue;
    INFO(name);
    CHECK(checkHypercomplex(e.structure.J[0], e.structure.J[1], e.structure.J[2],
                            e.structure.algebra)
              .ok());
  }
}

TEST_CASE("a repeated complex structure violates the quaternion relations") {
  CatalogEntry e = builtin("aff_C");
  const Endo& j = e.structure.J[0];
  auto res = checkHypercomplex(j, j, j, e.structure.algebra);
  REQUIRE_FALSE(res.ok());
  CHECK(res.issues.front().what.find("J1*J2") != std::string::npos);
}

TEST_CASE("abelian hypercomplex classification") {
  CatalogEntry affc = builtin("aff_C");
  CHECK(isAbelianHypercomplex(affc.structure.J[0], affc.structure.J[1], affc.structure.J[2],
                              affc.structure.algebra)
            .abelian);
  CatalogEntry h8 = builtin("heis8");
  CHECK(isAbelianHypercomplex(h8.structure.J[0], h8.structure.J[1], h8.structure.J[2],
                              h8.structure.algebra)
            .abelian);
  CatalogEntry h12 = builtin("heis8_rho12");
  auto res = isAbelianHypercomplex(h12.structure.J[0], h12.structure.J[1],
                                   h12.structure.J[2], h12.structure.algebra);
  CHECK_FALSE(res.abelian);
  CHECK_FALSE(res.witness.empty());
  GeomStructure flat = abelianFlat();
  CHECK(isAbelianHypercomplex(flat.J[0], flat.J[1], flat.J[2], flat.algebra).abelian);
}

TEST_CASE("Levi-Civita connection of an abelian algebra vanishes") {
  GeomStructure s = abelianFlat();
  Connection lc = leviCivita(s);
  for (const Endo& m : lc.gamma) CHECK(isZero(m));
}

TEST_CASE("Levi-Civita connection of sp(1) + u(1)") {
  CatalogEntry e = builtin("sp1_u1");
  Connection lc = leviCivita(e.structure);
  const LieAlgebra& g = e.structure.algebra;
  // hand values: nabla_{e1} e2 = 1/2 e3 and cyclic
  Scalar half = Scalar::fraction(1, 2);
  CHECK(Vec(lc.gamma[0].col(1)) == Vec(half * g.basisVec(3)));
  CHECK(Vec(lc.gamma[1].col(2)) == Vec(half * g.basisVec(1)));
  CHECK(Vec(lc.gamma[2].col(0)) == Vec(half * g.basisVec(2)));
  CHECK(isZero(Vec(lc.gamma[3].col(0))));
  // non-flat: the 3-sphere factor has curvature
  CHECK_FALSE(isFlat(lc, g));
}

TEST_CASE("Levi-Civita is metric and torsion-free on every entry") {
  for (const auto& name : builtinNames()) {
    CatalogEntry e = builtin(name);
    INFO(name);
    Connection lc = leviCivita(e.structure);
    CHECK(torsion(lc, e.structure.algebra).empty());
    const Mat& G = e.structure.metric->gram;
    for (const Endo& m : lc.gamma) CHECK(isZero(Mat(m.transpose() * G + G * m)));
  }
}

TEST_CASE("Bismut connection of the bi-invariant structure vanishes") {
  CatalogEntry e = builtin("sp1_u1");
  Connection b = bismut(e.structure, 0);
  for (const Endo& m : b.gamma) CHECK(isZero(m));
  // hence the torsion 3-form is minus the lowered bracket
  auto c = torsionThreeForm(b, e.structure);
  REQUIRE(c.has_value());
  CHECK(*c == KForm::monomial(4, {1, 2, 3}, Scalar(-1)));
}

TEST_CASE("Bismut connection of an abelian algebra vanishes") {
  GeomStructure s = abelianFlat();
  Connection b = bismut(s, 0);
  for (const Endo& m : b.gamma) CHECK(isZero(m));
}

TEST_CASE("Bismut torsion of the doubled plane algebra, two routes") {
  CatalogEntry e = builtin("e2_tangent");
  auto c = torsionThreeForm(bismut(e.structure, 0), e.structure);
  REQUIRE(c.has_value());
  CHECK(*c == KForm::monomial(8, {2, 5, 6}, Scalar(-2)));
  // independent route: d omega_1 pulled back through J_1
  KForm sigma = pullback(ceDifferential(e.structure.kaehlerForm(0), e.structure.algebra),
                         e.structure.J[0]);
  CHECK(*c == sigma);
  CHECK(ceDifferential(*c, e.structure.algebra) ==
        KForm::monomial(8, {1, 2, 5, 6}, Scalar(4)));
}

TEST_CASE("Bismut torsion of the doubled hyperbolic-plane algebra, two routes") {
  CatalogEntry e = builtin("su21_tangent");
  auto c = torsionThreeForm(bismut(e.structure, 0), e.structure);
  REQUIRE(c.has_value());
  KForm expected(8, 3);
  Scalar half = Scalar::fraction(1, 2);
  expected.add({1, 5, 8}, half);
  expected.add({1, 6, 7}, half);
  expected.add({2, 5, 7}, -half);
  expected.add({2, 6, 8}, half);
  expected.add({3, 5, 6}, Scalar(-1));
  expected.add({3, 7, 8}, Scalar(2));
  CHECK(*c == expected);
  KForm sigma = pullback(ceDifferential(e.structure.kaehlerForm(0), e.structure.algebra),
                         e.structure.J[0]);
  CHECK(*c == sigma);
}

TEST_CASE("Bismut defining properties hold on every Hermitian entry") {
  for (const auto& name : builtinNames()) {
    CatalogEntry e = builtin(name);
    if (e.structure.J.empty()) continue;
    INFO(name);
    Connection b = bismut(e.structure, 0);
    const Mat& G = e.structure.metric->gram;
    const Endo& J = e.structure.J[0];
    for (const Endo& m : b.gamma) {
      CHECK(isZero(Mat(m.transpose() * G + G * m)));
      CHECK(isZero(Mat(m * J - J * m)));
    }
    CHECK(torsionThreeForm(b, e.structure).has_value());
  }
}

TEST_CASE("the three Bismut connections agree on HKT entries") {
  for (const char* name : {"sp1_u1", "aff_C", "alg3", "alg4", "heis8", "heis8_rho12",
                           "sp1u1_tangent", "e2_tangent", "su21_tangent"}) {
    CatalogEntry e = builtin(name);
    INFO(name);
    REQUIRE(hktCheck(e.structure).hkt);
    Connection b1 = bismut(e.structure, 0);
    CHECK(bismut(e.structure, 1) == b1);
    CHECK(bismut(e.structure, 2) == b1);
  }
}

TEST_CASE("torsion of a generic connection is not a 3-form") {
  CatalogEntry e = builtin("sp1_u1");
  Connection c;
  c.gamma.assign(4, Mat::Constant(4, 4, Scalar(0)));
  c.gamma[0](0, 1) = Scalar(1);  // nabla_{e1} e2 = e1, asymmetric on purpose
  CHECK_FALSE(torsionThreeForm(c, e.structure).has_value());
}

TEST_CASE("curvature of the projection connection vanishes") {
  CatalogEntry e = builtin("sp1_u1");
  CHECK(isFlat(e.connections.at("D"), e.structure.algebra));
}

TEST_CASE("zero connection is flat also on non-abelian algebras") {
  CatalogEntry e = builtin("sp1_u1");
  Connection zero;
  zero.gamma.assign(4, Mat::Constant(4, 4, Scalar(0)));
  CHECK(isFlat(zero, e.structure.algebra));
}

TEST_CASE("HKT certificates on the Heisenberg-type entry and a rescaled metric") {
  CatalogEntry e = builtin("heis8");
  auto res = hktCheck(e.structure);
  CHECK(res.hkt);
  CHECK(res.routeA == res.routeB);

  // rescale the quaternionic block span{e1..e4} by 2: still compatible,
  // still HKT (abelian hypercomplex with a compatible metric)
  GeomStructure rescaled = e.structure;
  Mat gram = Mat::Identity(8, 8);
  for (int i = 0; i < 4; ++i) gram(i, i) = Scalar(2);
  rescaled.metric = Metric{gram};
  CHECK(validateStructure(rescaled).ok());
  auto res2 = hktCheck(rescaled);
  CHECK(res2.hkt);
  CHECK(res2.routeA == res2.routeB);
}

TEST_CASE("HKT certificates agree on non-HKT hyper-Hermitian structures") {
  // perturb the tangent double of sp(1) + u(1) by an averaged compatible
  // metric that mixes the two factors
  CatalogEntry e = builtin("sp1u1_tangent");
  Mat seed = Mat::Identity(8, 8);
  seed(0, 4) = seed(4, 0) = Scalar::fraction(1, 4);
  Mat sum = seed;
  for (int a = 0; a < 3; ++a)
    sum += Mat(e.structure.J[static_cast<size_t>(a)].transpose() * seed *
               e.structure.J[static_cast<size_t>(a)]);
  GeomStructure perturbed = e.structure;
  perturbed.metric = Metric{sum};
  REQUIRE(validateStructure(perturbed).ok());
  auto res = hktCheck(perturbed);
  CHECK(res.routeA == res.routeB);
  CHECK_FALSE(res.hkt);
}

TEST_CASE("Lee forms across the three structures coincide on HKT entries") {
  for (const char* name : {"heis8", "sp1u1_tangent", "e2_tangent", "su21_tangent", "alg4"}) {
    CatalogEntry e = builtin(name);
    INFO(name);
    auto c = torsionThreeForm(bismut(e.structure, 0), e.structure);
    REQUIRE(c.has_value());
    KForm t0 = leeForm(e.structure, *c, 0);
    CHECK(leeForm(e.structure, *c, 1) == t0);
    CHECK(leeForm(e.structure, *c, 2) == t0);
  }
}

TEST_CASE("Lee form values") {
  CatalogEntry h8 = builtin("heis8");
  auto c8 = torsionThreeForm(bismut(h8.structure, 0), h8.structure);
  CHECK(leeForm(h8.structure, *c8, 0).isZeroForm());

  CatalogEntry su = builtin("su21_tangent");
  auto csu = torsionThreeForm(bismut(su.structure, 0), su.structure);
  CHECK(leeForm(su.structure, *csu, 0) == KForm::monomial(8, {4}, Scalar(-3)));

  CatalogEntry e2 = builtin("e2_tangent");
  auto ce2 = torsionThreeForm(bismut(e2.structure, 0), e2.structure);
  CHECK(leeForm(e2.structure, *ce2, 0) == KForm::monomial(8, {1}, Scalar(-2)));
}

TEST_CASE("codifferential is the exact adjoint of the differential") {
  std::mt19937 rng(47);
  for (const char* name : {"sp1_u1", "alg4", "heis8"}) {
    CatalogEntry e = builtin(name);
    INFO(name);
    const int n = e.structure.dim();
    Mat ginv = e.structure.metric->inverse();
    for (int k = 1; k <= 3; ++k) {
      KForm alpha = testing::randomForm(rng, n, k - 1);
      KForm beta = testing::randomForm(rng, n, k);
      KForm dalpha = ceDifferential(alpha, e.structure.algebra);
      KForm dstarBeta = codifferential(beta, e.structure);
      // <d* beta, alpha>_{k-1} == <beta, d alpha>_k via the monomial grams
      auto inner = [&](const KForm& x, const KForm& y, int deg) {
        Mat G = lambdaGram(ginv, n, deg);
        auto tuples = increasingTuples(n, deg);
        Vec vx(static_cast<Index>(tuples.size())), vy(static_cast<Index>(tuples.size()));
        for (size_t t = 0; t < tuples.size(); ++t) {
          vx(static_cast<Index>(t)) = x.coeff(tuples[t]);
          vy(static_cast<Index>(t)) = y.coeff(tuples[t]);
        }
        return Scalar((vx.transpose() * G * vy)(0, 0));
      };
      CHECK(inner(dstarBeta, alpha, k - 1) == inner(beta, dalpha, k));
    }
  }
}

TEST_CASE("codifferential with a non-diagonal compatible metric") {
  // exercise the general gram path
  CatalogEntry e = builtin("heis8");
  Mat seed = Mat::Identity(8, 8);
  seed(0, 4) = seed(4, 0) = Scalar::fraction(1, 4);
  Mat sum = seed;
  for (int a = 0; a < 3; ++a)
    sum += Mat(e.structure.J[static_cast<size_t>(a)].transpose() * seed *
               e.structure.J[static_cast<size_t>(a)]);
  GeomStructure s = e.structure;
  s.metric = Metric{sum};
  REQUIRE(validateStructure(s).ok());
  std::mt19937 rng(53);
  KForm alpha = testing::randomForm(rng, 8, 1);
  KForm beta = testing::randomForm(rng, 8, 2);
  Mat ginv = s.metric->inverse();
  auto inner = [&](const KForm& x, const KForm& y, int deg) {
    Mat G = lambdaGram(ginv, 8, deg);
    auto tuples = increasingTuples(8, deg);
    Vec vx(static_cast<Index>(tuples.size())), vy(static_cast<Index>(tuples.size()));
    for (size_t t = 0; t < tuples.size(); ++t) {
      vx(static_cast<Index>(t)) = x.coeff(tuples[t]);
      vy(static_cast<Index>(t)) = y.coeff(tuples[t]);
    }
    return Scalar((vx.transpose() * G * vy)(0, 0));
  };
  CHECK(inner(codifferential(beta, s), alpha, 1) ==
        inner(beta, ceDifferential(alpha, s.algebra), 2));
}

TEST_CASE("codifferential edge cases") {
  CatalogEntry e = builtin("e2_tangent");
  // the torsion 3-form is co-closed on this entry
  auto c = torsionThreeForm(bismut(e.structure, 0), e.structure);
  CHECK(codifferential(*c, e.structure).isZeroForm());
  // degree 0 input gives the zero form
  KForm constant(8, 0);
  constant.add({}, Scalar(5));
  CHECK(codifferential(constant, e.structure).isZeroForm());
  // d* of any 1-form on an abelian algebra vanishes
  GeomStructure flat = abelianFlat();
  std::mt19937 rng(59);
  KForm oneForm = testing::randomForm(rng, 4, 1);
  CHECK(codifferential(oneForm, flat).isZeroForm());
}

TEST_CASE("Obata connection of an abelian algebra vanishes") {
  GeomStructure s = abelianFlat();
  Connection ob = obata(s);
  for (const Endo& m : ob.gamma) CHECK(isZero(m));
}

TEST_CASE("Obata connection of the twisted 4-dimensional algebra") {
  CatalogEntry e = builtin("alg4");
  Connection ob = obata(e.structure);
  CHECK(isZero(Mat(ob.gamma[0] - Scalar::fraction(3, 4) * Mat::Identity(4, 4))));
  // remaining directions are checked against the frozen table in the
  // acceptance suite; here verify the defining properties and uniqueness
  CHECK(torsion(ob, e.structure.algebra).empty());
  for (const Endo& j : e.structure.J)
    for (const Endo& m : ob.gamma) CHECK(isZero(Mat(m * j - j * m)));
}

TEST_CASE("Obata solve rejects non-hypercomplex input") {
  CatalogEntry e = builtin("aff_C");
  CHECK_THROWS_AS(obata(e.structure.J[0], e.structure.J[0], e.structure.J[0],
                        e.structure.algebra),
                  ValidationError);
}

TEST_CASE("infinitesimal holonomy of flat connections is zero") {
  CatalogEntry e = builtin("sp1_u1");
  CHECK(infinitesimalHolonomy(e.connections.at("D"), e.structure.algebra).empty());
}

TEST_CASE("infinitesimal holonomy of the alg4 Obata connection") {
  CatalogEntry e = builtin("alg4");
  auto hol = infinitesimalHolonomy(obata(e.structure), e.structure.algebra);
  CHECK(hol.size() == 3);
}

TEST_CASE("sp-homomorphism witness clauses") {
  CatalogEntry e = builtin("sp1_u1");
  CHECK(checkSpHomomorphism(e.connections.at("D"), e.structure).ok());
  CatalogEntry affc = builtin("aff_C");
  CHECK(checkSpHomomorphism(affc.connections.at("D"), affc.structure).ok());

  // D_X = id for every X: symmetric, so not skew; also not a homomorphism
  Connection bad;
  bad.gamma.assign(4, Mat::Identity(4, 4));
  auto res = checkSpHomomorphism(bad, e.structure);
  REQUIRE_FALSE(res.ok());
  bool skewIssue = false, homIssue = false;
  for (const auto& v : res.violations) {
    if (v.what.find("skew") != std::string::npos) skewIssue = true;
    if (v.what.find("[D_X, D_Y]") != std::string::npos) homIssue = true;
  }
  CHECK(skewIssue);
  CHECK(homIssue);
}

TEST_CASE("classification respects the flag implications") {
  for (const auto& name : builtinNames()) {
    CatalogEntry e = builtin(name);
    INFO(name);
    Report r = classify(e.structure);
    if (r.hyperKahler.value_or(false)) {
      CHECK(r.strong.value_or(false));
      CHECK(r.hkt.value_or(false));
    }
    if (r.strong.value_or(false)) CHECK(r.hkt.value_or(false));
    if (r.balanced.value_or(false)) CHECK(r.conformallyBalanced.value_or(false));
    if (r.hkt.value_or(false)) {
      CHECK(r.strong.value_or(false) != r.weak.value_or(false));
    }
  }
}

TEST_CASE("classification of the Kaehler bases") {
  Report e2 = classify(builtin("e2_central").structure);
  CHECK(e2.kahler.value_or(false));
  CHECK(e2.hermitian.value_or(false));
  CHECK(e2.forms.at("c").isZeroForm());
  Report su = classify(builtin("su21_solv").structure);
  CHECK(su.kahler.value_or(false));
  // the hyperbolic-plane model is Kaehler non-flat
  CHECK_FALSE(isFlat(leviCivita(builtin("su21_solv").structure),
                     builtin("su21_solv").structure.algebra));
}

TEST_CASE("metric validation") {
  Metric notSym{Mat::Identity(2, 2)};
  notSym.gram(0, 1) = Scalar(1);
  CHECK_FALSE(notSym.isSymmetric());
  Mat m(2, 2);
  m << Scalar(1), Scalar(2), Scalar(2), Scalar(1);
  CHECK_FALSE(Metric{m}.isPositiveDefinite());
  CHECK(Metric{Mat::Identity(3, 3)}.isPositiveDefinite());
}
