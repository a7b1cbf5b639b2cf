#pragma once

#include "hkt/geometry.hpp"

namespace hkt {

struct AdmissibilityError : std::runtime_error {
  explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Left multiplication by i, j, k on H^q = R^{4q} in the basis (1, i, j, k)
/// per quaternionic coordinate. This model is fixed once; the extension
/// structures below depend on it bit-exactly.
Endo leftMult(int alpha, int q);

/// Quaternionic representation rho : g -> gl(q, H), one matrix per basis
/// direction of g, each commuting with the fixed left multiplications.
struct QuatRep {
  int q = 0;
  std::vector<Endo> rho;  // dim(g) matrices of size 4q x 4q

  int fiberDim() const { return 4 * q; }
};

/// Checks [rho(X), L_alpha] = 0 and rho([X, Y]) = [rho(X), rho(Y)].
CheckResult validateQuatRep(const QuatRep& r, const LieAlgebra& g);

/// Tangent Lie algebra g x_D g with the lifted hypercomplex structure
///   Jt_1 (X1, X2) = (J1 X1, J1 X2),  Jt_2 (X1, X2) = (J2 X2, J2 X1),
/// metric g + g with orthogonal summands. D must be flat and commute with
/// every J_alpha; those preconditions are rejected with a witness.
GeomStructure tangentAlgebra(const GeomStructure& s, const Connection& d);

/// g x_rho H^q with Jt_alpha = J_alpha + L_alpha and metric g + standard.
GeomStructure rhoExtension(const GeomStructure& s, const QuatRep& r);

/// Doubling of a Hermitian Lie algebra along a flat torsion-free complex
/// connection:
///   J1 (X1, X2) = (J X1, -J X2),  J2 (X1, X2) = (X2, -X1),  J3 = J1 J2.
/// The output is HKT exactly when the input is Kaehler; that equivalence is
/// re-verified at runtime.
GeomStructure kaehlerToHkt(const GeomStructure& h, const Connection& d);

/// The lifted connection Dt_{(X1, X2)} (Y1, Y2) = (D_{X1} Y1, D_{X1} Y2)
/// on the doubled algebra.
Connection liftConnection(const Connection& d);

/// One more tangent step: builds Dt from the original connection, verifies it
/// is flat and hyper-Hermitian on ts, then applies tangentAlgebra again.
GeomStructure iterateTangent(const GeomStructure& ts, const Connection& originalD);

}  // namespace hkt
