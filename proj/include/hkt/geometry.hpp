#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkt/kform.hpp"

namespace hkt {

using Endo = Mat;

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

struct Metric {
  Mat gram;

  int dim() const { return static_cast<int>(gram.rows()); }
  bool isSymmetric() const;
  /// Exact Sylvester test: all leading principal minors positive.
  bool isPositiveDefinite() const;
  Mat inverse() const;
  Scalar apply(const Vec& x, const Vec& y) const { return (x.transpose() * gram * y)(0, 0); }
};

/// Left-invariant connection: one endomorphism per basis direction,
/// entry i being nabla_{e_{i+1}}.
struct Connection {
  std::vector<Endo> gamma;

  int dim() const { return static_cast<int>(gamma.size()); }
  const Endo& operator[](int i) const { return gamma[static_cast<size_t>(i)]; }
  Endo along(const Vec& x) const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.gamma == b.gamma;
  }
};

/// Lie algebra with an optional metric and zero, one or three compatible
/// almost complex structures (Hermitian vs hyper-Hermitian case).
struct GeomStructure {
  LieAlgebra algebra;
  std::optional<Metric> metric;
  std::vector<Endo> J;  // size 0, 1 or 3

  int dim() const { return algebra.dim(); }
  bool hasTriple() const { return J.size() == 3; }
  /// Kaehler form omega(X, Y) = g(J_alpha X, Y) of the alpha-th structure.
  KForm kaehlerForm(int alpha) const;
};

struct CheckIssue {
  std::string what;     // violated identity
  std::string witness;  // offending indices / values
};

struct CheckResult {
  std::vector<CheckIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

struct Report {
  std::array<std::optional<bool>, 3> integrable;
  std::optional<bool> hypercomplex, abelianHypercomplex, hermitian, kahler,
      hyperHermitian, hkt, strong, weak, balanced, conformallyBalanced, hyperKahler,
      torsionCoclosed;
  /// omega1.., c, dc, theta, dtheta, dstar_c where defined.
  std::map<std::string, KForm> forms;
};

// -- tensors and checks -------------------------------------------------------

/// Nijenhuis tensor N(e_i, e_j) for i < j; empty map means J is integrable.
std::map<std::pair<int, int>, Vec> nijenhuis(const Endo& J, const LieAlgebra& g);

CheckResult checkHypercomplex(const Endo& J1, const Endo& J2, const Endo& J3,
                              const LieAlgebra& g);

struct AbelianResult {
  bool abelian;
  std::string witness;  // set when not abelian
};
AbelianResult isAbelianHypercomplex(const Endo& J1, const Endo& J2, const Endo& J3,
                                    const LieAlgebra& g);

/// Structural validation of a GeomStructure (metric PD, J^2 = -id, quaternion
/// relations, integrability, compatibility). Partial data checks what exists.
CheckResult validateStructure(const GeomStructure& s);

// -- connections --------------------------------------------------------------

Connection leviCivita(const GeomStructure& s);

/// The unique Hermitian connection with totally skew-symmetric torsion for
/// (J_alpha, g); the defining properties are re-verified on the result.
Connection bismut(const GeomStructure& s, int alpha = 0);

/// Torsion-free connection parallelizing the whole triple, by exact linear
/// solve; throws ValidationError when the system is not uniquely solvable.
Connection obata(const Endo& J1, const Endo& J2, const Endo& J3, const LieAlgebra& g);
Connection obata(const GeomStructure& s);

std::map<std::pair<int, int>, Vec> torsion(const Connection& c, const LieAlgebra& g);

/// Lowers the first slot of the torsion with g; nullopt when the result is
/// not totally antisymmetric (a valid outcome for a generic connection).
std::optional<KForm> torsionThreeForm(const Connection& c, const GeomStructure& s);

std::map<std::pair<int, int>, Endo> curvature(const Connection& c, const LieAlgebra& g);
bool isFlat(const Connection& c, const LieAlgebra& g);

/// Covariant-derivative-and-bracket span closure seeded with the curvature.
std::vector<Endo> infinitesimalHolonomy(const Connection& c, const LieAlgebra& g);

struct HktResult {
  bool hkt;
  bool routeA;          // bracket-sum identity on basis triples
  bool routeB;          // equality of the three forms d omega_a (J_a., J_a., J_a.)
  KForm sigma1;         // route-B form for alpha = 1
};

/// Both certificates are computed independently; disagreement throws.
HktResult hktCheck(const GeomStructure& s);

/// Lee form via the inverse-metric contraction of the torsion 3-form.
KForm leeForm(const GeomStructure& s, const KForm& c, int alpha = 0);

/// Exact adjoint of the Chevalley-Eilenberg differential w.r.t. the metric
/// inner products on Lambda^k.
KForm codifferential(const KForm& beta, const GeomStructure& s);

struct SpHomResult {
  std::vector<CheckIssue> violations;
  bool ok() const { return violations.empty(); }
};

/// Verifies D_X skew-symmetric, [D_X, J_a] = 0 and D_{[X,Y]} = [D_X, D_Y].
SpHomResult checkSpHomomorphism(const Connection& d, const GeomStructure& s);

Report classify(const GeomStructure& s);

}  // namespace hkt
