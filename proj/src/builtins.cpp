#include "hkt/catalog.hpp"

namespace hkt {

namespace {

using Col = std::vector<std::pair<int, Scalar>>;

const Scalar kHalf = Scalar::fraction(1, 2);
const Scalar kSqrt2 = Scalar::sqrt2();
const Scalar kHalfSqrt2 = Scalar(Rational(0), Rational(1, 2));  // sqrt2 / 2

/// Endomorphism from column images: images[i] lists (k, c) with M e_i = sum c e_k.
Endo endo(int dim, const std::map<int, Col>& images) {
  Endo m = Endo::Constant(dim, dim, Scalar(0));
  for (const auto& [src, terms] : images)
    for (const auto& [dst, c] : terms) m(dst - 1, src - 1) = c;
  return m;
}

Endo zeroEndo(int dim) { return Endo::Constant(dim, dim, Scalar(0)); }

Mat diagonal(const std::vector<Scalar>& d) {
  Mat m = Mat::Constant(static_cast<Index>(d.size()), static_cast<Index>(d.size()), Scalar(0));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = d[i];
  return m;
}

KForm form(int dim, const std::vector<std::pair<std::vector<int>, Scalar>>& terms) {
  int deg = terms.empty() ? 0 : static_cast<int>(terms.front().first.size());
  KForm f(dim, deg);
  for (const auto& [idx, c] : terms) f.add(idx, c);
  return f;
}

Connection lift4(const Connection& d) { return liftConnection(d); }

// -- 4-dimensional bases ------------------------------------------------------

// sp(1) + u(1): [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2, orthonormal metric.
CatalogEntry makeSp1U1() {
  CatalogEntry e;
  e.name = "sp1_u1";
  LieAlgebra g(4);
  g.addBracketTerm(1, 2, 3, Scalar(1));
  g.addBracketTerm(1, 3, 2, Scalar(-1));
  g.addBracketTerm(2, 3, 1, Scalar(1));
  Endo j1 = endo(4, {{1, {{4, Scalar(-1)}}}, {2, {{3, Scalar(1)}}}, {3, {{2, Scalar(-1)}}}, {4, {{1, Scalar(1)}}}});
  Endo j2 = endo(4, {{1, {{3, Scalar(-1)}}}, {2, {{4, Scalar(-1)}}}, {3, {{1, Scalar(1)}}}, {4, {{2, Scalar(1)}}}});
  e.structure = GeomStructure{g, Metric{Mat::Identity(4, 4)}, {j1, j2, Endo(j1 * j2)}};
  // The flat hyper-Hermitian connection induced by the projection onto sp(1):
  // D_{e_a} = (1/2) J'_a for a = 1, 2, 3, with J'_a spanning the centralizer
  // of {J1, J2} together with the identity.
  Endo jp1 = endo(4, {{1, {{4, Scalar(1)}}}, {2, {{3, Scalar(1)}}}, {3, {{2, Scalar(-1)}}}, {4, {{1, Scalar(-1)}}}});
  Endo jp2 = endo(4, {{1, {{3, Scalar(-1)}}}, {2, {{4, Scalar(1)}}}, {3, {{1, Scalar(1)}}}, {4, {{2, Scalar(-1)}}}});
  Endo jp3 = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(1)}}}, {4, {{3, Scalar(-1)}}}});
  e.connections["D"] = Connection{{Endo(kHalf * jp1), Endo(kHalf * jp2), Endo(kHalf * jp3), zeroEndo(4)}};
  e.expected.flags = {{"hkt", true}, {"strong", true}, {"weak", false}, {"hyper_kahler", false}};
  return e;
}

// aff(C): [e1,e3] = e1 = -[e2,e4], [e2,e3] = e2 = [e1,e4]; abelian triple.
CatalogEntry makeAffC() {
  CatalogEntry e;
  e.name = "aff_C";
  LieAlgebra g(4);
  g.addBracketTerm(1, 3, 1, Scalar(1));
  g.addBracketTerm(1, 4, 2, Scalar(1));
  g.addBracketTerm(2, 3, 2, Scalar(1));
  g.addBracketTerm(2, 4, 1, Scalar(-1));
  Endo j1 = endo(4, {{1, {{4, Scalar(-1)}}}, {2, {{3, Scalar(1)}}}, {3, {{2, Scalar(-1)}}}, {4, {{1, Scalar(1)}}}});
  Endo j2 = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(-1)}}}, {4, {{3, Scalar(1)}}}});
  e.structure = GeomStructure{g, Metric{Mat::Identity(4, 4)}, {j1, j2, Endo(j1 * j2)}};
  // Family D_{e3} = a1 J'_1 + a2 J'_2 + a3 J'_3, D_{e4} = b D_{e3}, pinned at
  // (a1, a2, a3, b) = (1, 0, 0, 1).
  Endo jp1 = endo(4, {{1, {{4, Scalar(1)}}}, {2, {{3, Scalar(1)}}}, {3, {{2, Scalar(-1)}}}, {4, {{1, Scalar(-1)}}}});
  e.connections["D"] = Connection{{zeroEndo(4), zeroEndo(4), jp1, jp1}};
  e.expected.flags = {{"hkt", true}, {"weak", true}, {"abelian_hypercomplex", true}};
  return e;
}

// (0, -e12, -e13, -e14): [e1, ek] = ek for k = 2, 3, 4.
CatalogEntry makeAlg3() {
  CatalogEntry e;
  e.name = "alg3";
  LieAlgebra g(4);
  g.addBracketTerm(1, 2, 2, Scalar(1));
  g.addBracketTerm(1, 3, 3, Scalar(1));
  g.addBracketTerm(1, 4, 4, Scalar(1));
  Endo j1 = endo(4, {{1, {{4, Scalar(-1)}}}, {2, {{3, Scalar(1)}}}, {3, {{2, Scalar(-1)}}}, {4, {{1, Scalar(1)}}}});
  Endo j2 = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(-1)}}}, {4, {{3, Scalar(1)}}}});
  e.structure = GeomStructure{g, Metric{Mat::Identity(4, 4)}, {j1, j2, Endo(j1 * j2)}};
  Endo jp1 = endo(4, {{1, {{4, Scalar(1)}}}, {2, {{3, Scalar(1)}}}, {3, {{2, Scalar(-1)}}}, {4, {{1, Scalar(-1)}}}});
  e.connections["D"] = Connection{{jp1, zeroEndo(4), zeroEndo(4), zeroEndo(4)}};
  e.expected.flags = {{"hkt", true}, {"weak", true}};
  return e;
}

// (0, -1/2 e12, -1/2 e13, -e23 - e14) with metric (e1)^2 + (e4)^2 + 2((e2)^2 + (e3)^2).
CatalogEntry makeAlg4() {
  CatalogEntry e;
  e.name = "alg4";
  LieAlgebra g(4);
  g.addBracketTerm(1, 2, 2, kHalf);
  g.addBracketTerm(1, 3, 3, kHalf);
  g.addBracketTerm(1, 4, 4, Scalar(1));
  g.addBracketTerm(2, 3, 4, Scalar(1));
  Endo j1 = endo(4, {{1, {{4, Scalar(1)}}}, {2, {{3, Scalar(-1)}}}, {3, {{2, Scalar(1)}}}, {4, {{1, Scalar(-1)}}}});
  Endo j2 = endo(4, {{1, {{2, kHalfSqrt2}}}, {2, {{1, -kSqrt2}}}, {3, {{4, -kSqrt2}}}, {4, {{3, kHalfSqrt2}}}});
  e.structure =
      GeomStructure{g, Metric{diagonal({Scalar(1), Scalar(2), Scalar(2), Scalar(1)})}, {j1, j2, Endo(j1 * j2)}};
  Endo jp1 = endo(4, {{1, {{4, Scalar(-1)}}}, {2, {{3, Scalar(-1)}}}, {3, {{2, Scalar(1)}}}, {4, {{1, Scalar(1)}}}});
  e.connections["D"] = Connection{{jp1, zeroEndo(4), zeroEndo(4), zeroEndo(4)}};
  e.expected.flags = {{"hkt", true}, {"weak", true}, {"balanced", false}};
  return e;
}

// -- 8-dimensional Heisenberg-type base and its 12-dimensional extension -------

CatalogEntry makeHeis8() {
  CatalogEntry e;
  e.name = "heis8";
  LieAlgebra g(8);
  g.addBracketTerm(5, 6, 2, Scalar(1));
  g.addBracketTerm(5, 7, 3, Scalar(1));
  g.addBracketTerm(5, 8, 4, Scalar(1));
  g.addBracketTerm(6, 7, 4, Scalar(-1));
  g.addBracketTerm(6, 8, 3, Scalar(1));
  g.addBracketTerm(7, 8, 2, Scalar(-1));
  Endo j1 = endo(8, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(1)}}}, {4, {{3, Scalar(-1)}}},
                     {5, {{6, Scalar(1)}}}, {6, {{5, Scalar(-1)}}}, {7, {{8, Scalar(1)}}}, {8, {{7, Scalar(-1)}}}});
  Endo j2 = endo(8, {{1, {{3, Scalar(1)}}}, {2, {{4, Scalar(-1)}}}, {3, {{1, Scalar(-1)}}}, {4, {{2, Scalar(1)}}},
                     {5, {{7, Scalar(1)}}}, {6, {{8, Scalar(-1)}}}, {7, {{5, Scalar(-1)}}}, {8, {{6, Scalar(1)}}}});
  e.structure = GeomStructure{g, Metric{Mat::Identity(8, 8)}, {j1, j2, Endo(j1 * j2)}};
  QuatRep rep;
  rep.q = 1;
  // rho(e1) is right quaternion multiplication by i; rho(e_k) = 0 otherwise.
  rep.rho.assign(8, zeroEndo(4));
  rep.rho[0] = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(-1)}}}, {4, {{3, Scalar(1)}}}});
  e.quatReps["rho1"] = rep;
  e.expected.flags = {{"hkt", true}, {"weak", true}, {"balanced", true}, {"abelian_hypercomplex", true}};
  return e;
}

CatalogEntry makeHeis8Rho12() {
  CatalogEntry base = makeHeis8();
  CatalogEntry e;
  e.name = "heis8_rho12";
  LieAlgebra g(12);
  for (const auto& [pair, terms] : base.structure.algebra.structureConstants())
    for (const auto& [k, c] : terms) g.addBracketTerm(pair.first, pair.second, k, c);
  g.addBracketTerm(1, 9, 10, Scalar(1));
  g.addBracketTerm(1, 10, 9, Scalar(-1));
  g.addBracketTerm(1, 11, 12, Scalar(-1));
  g.addBracketTerm(1, 12, 11, Scalar(1));
  std::vector<Endo> J;
  for (int a = 0; a < 3; ++a) {
    Endo ja = zeroEndo(12);
    ja.topLeftCorner(8, 8) = base.structure.J[static_cast<size_t>(a)];
    ja.bottomRightCorner(4, 4) = leftMult(a, 1);
    J.push_back(ja);
  }
  e.structure = GeomStructure{g, Metric{Mat::Identity(12, 12)}, J};
  // rho read as a block connection on the extension (zero on the base factor).
  Connection dt;
  dt.gamma.assign(12, zeroEndo(12));
  dt.gamma[0].bottomRightCorner(4, 4) = base.quatReps["rho1"].rho[0];
  e.connections["Dtilde"] = dt;
  e.expected.flags = {{"hkt", true}, {"weak", true}, {"balanced", true}, {"abelian_hypercomplex", false}};
  return e;
}

// -- tangent double of sp(1) + u(1) --------------------------------------------

CatalogEntry makeSp1U1Tangent() {
  CatalogEntry base = makeSp1U1();
  CatalogEntry e;
  e.name = "sp1u1_tangent";
  LieAlgebra g(8);
  g.addBracketTerm(1, 2, 3, Scalar(1));
  g.addBracketTerm(1, 3, 2, Scalar(-1));
  g.addBracketTerm(2, 3, 1, Scalar(1));
  // [e_a, e_{4+k}] = (1/2) J'_a e_k in the second factor.
  g.addBracketTerm(1, 5, 8, kHalf);
  g.addBracketTerm(1, 6, 7, kHalf);
  g.addBracketTerm(1, 7, 6, -kHalf);
  g.addBracketTerm(1, 8, 5, -kHalf);
  g.addBracketTerm(2, 5, 7, -kHalf);
  g.addBracketTerm(2, 6, 8, kHalf);
  g.addBracketTerm(2, 7, 5, kHalf);
  g.addBracketTerm(2, 8, 6, -kHalf);
  g.addBracketTerm(3, 5, 6, kHalf);
  g.addBracketTerm(3, 6, 5, -kHalf);
  g.addBracketTerm(3, 7, 8, kHalf);
  g.addBracketTerm(3, 8, 7, -kHalf);
  const Endo& J1 = base.structure.J[0];
  const Endo& J2 = base.structure.J[1];
  Endo tj1 = zeroEndo(8), tj2 = zeroEndo(8);
  tj1.topLeftCorner(4, 4) = J1;
  tj1.bottomRightCorner(4, 4) = J1;
  tj2.topLeftCorner(4, 4) = J2;
  tj2.bottomRightCorner(4, 4) = J2;
  e.structure = GeomStructure{g, Metric{Mat::Identity(8, 8)}, {tj1, tj2, Endo(tj1 * tj2)}};
  e.connections["Dtilde"] = lift4(base.connections["D"]);
  e.expected.flags = {{"hkt", true}, {"strong", true}, {"weak", false}};
  return e;
}

// -- Kaehler bases and their doublings -----------------------------------------

// R + e(2): [e2,e3] = e4, [e2,e4] = -e3.
CatalogEntry makeE2Central() {
  CatalogEntry e;
  e.name = "e2_central";
  LieAlgebra g(4);
  g.addBracketTerm(2, 3, 4, Scalar(1));
  g.addBracketTerm(2, 4, 3, Scalar(-1));
  Endo j = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(1)}}}, {4, {{3, Scalar(-1)}}}});
  e.structure = GeomStructure{g, Metric{Mat::Identity(4, 4)}, {j}};
  Endo d1 = zeroEndo(4);
  d1(0, 0) = Scalar(1);
  d1(1, 1) = Scalar(1);
  Endo d2 = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(1)}}}, {4, {{3, Scalar(-1)}}}});
  e.connections["D"] = Connection{{d1, d2, zeroEndo(4), zeroEndo(4)}};
  e.expected.flags = {{"kahler", true}, {"hermitian", true}, {"balanced", true}};
  return e;
}

CatalogEntry makeE2Tangent() {
  CatalogEntry base = makeE2Central();
  CatalogEntry e;
  e.name = "e2_tangent";
  LieAlgebra g(8);
  g.addBracketTerm(2, 3, 4, Scalar(1));
  g.addBracketTerm(2, 4, 3, Scalar(-1));
  g.addBracketTerm(1, 5, 5, Scalar(1));
  g.addBracketTerm(1, 6, 6, Scalar(1));
  g.addBracketTerm(2, 5, 6, Scalar(1));
  g.addBracketTerm(2, 6, 5, Scalar(-1));
  g.addBracketTerm(2, 7, 8, Scalar(1));
  g.addBracketTerm(2, 8, 7, Scalar(-1));
  Endo j1 = endo(8, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(1)}}}, {4, {{3, Scalar(-1)}}},
                     {5, {{6, Scalar(-1)}}}, {6, {{5, Scalar(1)}}}, {7, {{8, Scalar(-1)}}}, {8, {{7, Scalar(1)}}}});
  Endo j2 = zeroEndo(8);
  j2.topRightCorner(4, 4) = Mat::Identity(4, 4);
  j2.bottomLeftCorner(4, 4) = -Mat::Identity(4, 4);
  e.structure = GeomStructure{g, Metric{Mat::Identity(8, 8)}, {j1, j2, Endo(j1 * j2)}};
  e.connections["Dtilde"] = lift4(base.connections["D"]);
  e.expected.flags = {{"hkt", true}, {"weak", true}, {"strong", false}, {"balanced", false},
                      {"conformally_balanced", true}, {"torsion_coclosed", true}};
  e.expected.forms = {
      {"c", {"torsion 3-form", form(8, {{{2, 5, 6}, Scalar(2)}})}},
      {"dc", {"derivative of the torsion 3-form", form(8, {{{1, 2, 5, 6}, Scalar(-4)}})}},
      {"theta", {"Lee form", form(8, {{{1}, Scalar(2)}})}},
      {"dtheta", {"derivative of the Lee form", KForm::zero(8, 2)}},
      {"dstar_c", {"codifferential of the torsion 3-form", KForm::zero(8, 2)}},
  };
  return e;
}

// Solvable model of the complex hyperbolic plane:
// [e1,e4] = -1/2 e1, [e2,e4] = -1/2 e2, [e1,e2] = e3, [e3,e4] = -e3.
CatalogEntry makeSu21Solv() {
  CatalogEntry e;
  e.name = "su21_solv";
  LieAlgebra g(4);
  g.addBracketTerm(1, 2, 3, Scalar(1));
  g.addBracketTerm(1, 4, 1, -kHalf);
  g.addBracketTerm(2, 4, 2, -kHalf);
  g.addBracketTerm(3, 4, 3, Scalar(-1));
  Endo j = endo(4, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(-1)}}}, {4, {{3, Scalar(1)}}}});
  e.structure = GeomStructure{g, Metric{Mat::Identity(4, 4)}, {j}};
  // The unique flat torsion-free complex connection with this support pattern;
  // torsion-freeness pins the off-diagonal halves, D J = 0 the diagonal signs.
  Endo d1 = endo(4, {{1, {{4, kHalf}}}, {2, {{3, kHalf}}}});
  Endo d2 = endo(4, {{1, {{3, -kHalf}}}, {2, {{4, kHalf}}}});
  Endo d4 = diagonal({kHalf, kHalf, Scalar(1), Scalar(1)});
  e.connections["D"] = Connection{{d1, d2, zeroEndo(4), d4}};
  e.expected.flags = {{"kahler", true}, {"hermitian", true}};
  return e;
}

CatalogEntry makeSu21Tangent() {
  CatalogEntry base = makeSu21Solv();
  CatalogEntry e;
  e.name = "su21_tangent";
  LieAlgebra g(8);
  g.addBracketTerm(1, 2, 3, Scalar(1));
  g.addBracketTerm(1, 4, 1, -kHalf);
  g.addBracketTerm(2, 4, 2, -kHalf);
  g.addBracketTerm(3, 4, 3, Scalar(-1));
  g.addBracketTerm(1, 5, 8, kHalf);
  g.addBracketTerm(1, 6, 7, kHalf);
  g.addBracketTerm(2, 5, 7, -kHalf);
  g.addBracketTerm(2, 6, 8, kHalf);
  g.addBracketTerm(4, 5, 5, kHalf);
  g.addBracketTerm(4, 6, 6, kHalf);
  g.addBracketTerm(4, 7, 7, Scalar(1));
  g.addBracketTerm(4, 8, 8, Scalar(1));
  Endo j1 = endo(8, {{1, {{2, Scalar(1)}}}, {2, {{1, Scalar(-1)}}}, {3, {{4, Scalar(-1)}}}, {4, {{3, Scalar(1)}}},
                     {5, {{6, Scalar(-1)}}}, {6, {{5, Scalar(1)}}}, {7, {{8, Scalar(1)}}}, {8, {{7, Scalar(-1)}}}});
  Endo j2 = zeroEndo(8);
  j2.topRightCorner(4, 4) = Mat::Identity(4, 4);
  j2.bottomLeftCorner(4, 4) = -Mat::Identity(4, 4);
  e.structure = GeomStructure{g, Metric{Mat::Identity(8, 8)}, {j1, j2, Endo(j1 * j2)}};
  e.connections["Dtilde"] = lift4(base.connections["D"]);
  e.expected.flags = {{"hkt", true}, {"weak", true}, {"strong", false}, {"balanced", false},
                      {"conformally_balanced", true}};
  e.expected.forms = {
      {"c",
       {"torsion 3-form",
        form(8, {{{2, 6, 8}, -kHalf},
                 {{1, 5, 8}, -kHalf},
                 {{3, 7, 8}, Scalar(2)},
                 {{1, 6, 7}, kHalf},
                 {{2, 5, 7}, -kHalf},
                 {{3, 5, 6}, Scalar(-1)}})}},
      {"theta", {"Lee form", form(8, {{{4}, Scalar(-3)}})}},
      {"dtheta", {"derivative of the Lee form", KForm::zero(8, 2)}},
  };
  return e;
}

}  // namespace

std::vector<std::string> builtinNames() {
  return {"sp1_u1",       "aff_C",      "alg3",          "alg4",
          "heis8",        "heis8_rho12", "sp1u1_tangent", "e2_central",
          "e2_tangent",   "su21_solv",  "su21_tangent"};
}

CatalogEntry builtin(const std::string& name) {
  if (name == "sp1_u1") return makeSp1U1();
  if (name == "aff_C") return makeAffC();
  if (name == "alg3") return makeAlg3();
  if (name == "alg4") return makeAlg4();
  if (name == "heis8") return makeHeis8();
  if (name == "heis8_rho12") return makeHeis8Rho12();
  if (name == "sp1u1_tangent") return makeSp1U1Tangent();
  if (name == "e2_central") return makeE2Central();
  if (name == "e2_tangent") return makeE2Tangent();
  if (name == "su21_solv") return makeSu21Solv();
  if (name == "su21_tangent") return makeSu21Tangent();
  throw ValidationError("unknown builtin entry '" + name + "'");
}

}  // namespace hkt
