#include "hkt/constructions.hpp"

namespace hkt {

namespace {

// Multiplication table of i, j, k acting on (1, i, j, k): entry (value, sign).
struct QuatAction {
  int image[4];
  int sign[4];
};

// row alpha = left multiplication by i_alpha on basis (1, i, j, k)
constexpr QuatAction kLeft[3] = {
    {{1, 0, 3, 2}, {1, -1, 1, -1}},  // i: 1->i, i->-1, j->k, k->-j
    {{2, 3, 0, 1}, {1, -1, -1, 1}},  // j: 1->j, i->-k, j->-1, k->i
    {{3, 2, 1, 0}, {1, 1, -1, -1}},  // k: 1->k, i->j, j->-i, k->-1
};

Mat blockDiag(const Mat& a, const Mat& b) {
  Mat out = Mat::Constant(a.rows() + b.rows(), a.cols() + b.cols(), Scalar(0));
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

void requireTriple(const GeomStructure& s, const char* who) {
  if (!s.hasTriple() || !s.metric)
    throw AdmissibilityError(std::string(who) + ": hyper-Hermitian input required");
}

void requireFlatCommuting(const GeomStructure& s, const Connection& d, const char* who) {
  if (d.dim() != s.dim())
    throw DimensionMismatch(std::string(who) + ": connection dimension mismatch");
  auto curv = curvature(d, s.algebra);
  if (!curv.empty()) {
    auto& [pair, r] = *curv.begin();
    throw AdmissibilityError(std::string(who) + ": connection not flat, R(e" +
                             std::to_string(pair.first) + ", e" +
                             std::to_string(pair.second) + ") != 0");
  }
  for (int i = 0; i < s.dim(); ++i) {
    if (isZero(d.gamma[static_cast<size_t>(i)])) continue;
    for (size_t a = 0; a < s.J.size(); ++a)
      if (!isZero(Mat(commutator(d.gamma[static_cast<size_t>(i)], s.J[a]))))
        throw AdmissibilityError(std::string(who) + ": D J" + std::to_string(a + 1) +
                                 " != 0 in direction e" + std::to_string(i + 1));
  }
}

}  // namespace

Endo leftMult(int alpha, int q) {
  if (alpha < 0 || alpha > 2) throw DimensionMismatch("leftMult: alpha out of range");
  const int n = 4 * q;
  Mat out = Mat::Constant(n, n, Scalar(0));
  const QuatAction& act = kLeft[alpha];
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < 4; ++c)
      out(4 * b + act.image[c], 4 * b + c) = Scalar(act.sign[c]);
  return out;
}

CheckResult validateQuatRep(const QuatRep& r, const LieAlgebra& g) {
  CheckResult res;
  const int n = g.dim();
  if (static_cast<int>(r.rho.size()) != n) {
    res.issues.push_back({"quaternionic representation must supply one matrix per direction", ""});
    return res;
  }
  const int f = r.fiberDim();
  for (int i = 0; i < n; ++i)
    if (r.rho[static_cast<size_t>(i)].rows() != f || r.rho[static_cast<size_t>(i)].cols() != f) {
      res.issues.push_back({"rho matrix of wrong size", "direction e" + std::to_string(i + 1)});
      return res;
    }
  for (int a = 0; a < 3; ++a) {
    Endo L = leftMult(a, r.q);
    for (int i = 0; i < n; ++i)
      if (!isZero(Mat(commutator(r.rho[static_cast<size_t>(i)], L))))
        res.issues.push_back({"[rho(X), L" + std::to_string(a + 1) + "] != 0",
                              "X = e" + std::to_string(i + 1)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec br = g.bracketBasis(i, j);
      Endo lhs = Endo::Constant(f, f, Scalar(0));
      for (int k = 0; k < n; ++k)
        if (!br(k).isZero()) lhs += br(k) * r.rho[static_cast<size_t>(k)];
      Endo rhs = commutator(r.rho[static_cast<size_t>(i - 1)], r.rho[static_cast<size_t>(j - 1)]);
      if (!isZero(Mat(lhs - rhs)))
        res.issues.push_back({"rho([X,Y]) != [rho(X), rho(Y)]",
                              "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")"});
    }
  return res;
}

GeomStructure tangentAlgebra(const GeomStructure& s, const Connection& d) {
  requireTriple(s, "tangentAlgebra");
  requireFlatCommuting(s, d, "tangentAlgebra");
  const int n = s.dim();
  GeomStructure out{LieAlgebra(2 * n), std::nullopt, {}};

  // [(X1, X2), (Y1, Y2)] = ([X1, Y1], D_{X1} Y2 - D_{Y1} X2)
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec br = s.algebra.bracketBasis(i, j);
      Vec ext = Vec::Constant(2 * n, Scalar(0));
      ext.head(n) = br;
      out.algebra.setBracket(i, j, ext);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec dv = d.gamma[static_cast<size_t>(i - 1)] * s.algebra.basisVec(j);
      Vec ext = Vec::Constant(2 * n, Scalar(0));
      ext.tail(n) = dv;
      out.algebra.setBracket(i, n + j, ext);
    }

  // Each structure lifts diagonally; this is the unique lift that is
  // integrable for every flat D with D J_alpha = 0.
  Endo tj1 = blockDiag(s.J[0], s.J[0]);
  Endo tj2 = blockDiag(s.J[1], s.J[1]);
  Endo tj3 = tj1 * tj2;
  out.J = {tj1, tj2, tj3};
  out.metric = Metric{blockDiag(s.metric->gram, s.metric->gram)};

  auto jac = out.algebra.jacobiDefect();
  if (!jac.ok()) throw InternalCheckError("tangentAlgebra: Jacobi identity fails on output");
  auto hc = checkHypercomplex(out.J[0], out.J[1], out.J[2], out.algebra);
  if (!hc.ok())
    throw InternalCheckError("tangentAlgebra: lifted triple invalid: " + hc.summary());
  return out;
}

GeomStructure rhoExtension(const GeomStructure& s, const QuatRep& r) {
  requireTriple(s, "rhoExtension");
  auto rep = validateQuatRep(r, s.algebra);
  if (!rep.ok()) throw AdmissibilityError("rhoExtension: " + rep.summary());
  const int n = s.dim();
  const int f = r.fiberDim();
  const int total = n + f;
  GeomStructure out{LieAlgebra(total), std::nullopt, {}};

  // [(X, V), (Y, W)] = ([X, Y], rho(X) W - rho(Y) V)
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec br = s.algebra.bracketBasis(i, j);
      Vec ext = Vec::Constant(total, Scalar(0));
      ext.head(n) = br;
      out.algebra.setBracket(i, j, ext);
    }
  for (int i = 1; i <= n; ++i)
    for (int v = 1; v <= f; ++v) {
      Vec col = r.rho[static_cast<size_t>(i - 1)].col(v - 1);
      Vec ext = Vec::Constant(total, Scalar(0));
      ext.tail(f) = col;
      out.algebra.setBracket(i, n + v, ext);
    }

  for (int a = 0; a < 3; ++a) out.J.push_back(blockDiag(s.J[static_cast<size_t>(a)], leftMult(a, r.q)));
  out.metric = Metric{blockDiag(s.metric->gram, Mat::Identity(f, f))};

  auto jac = out.algebra.jacobiDefect();
  if (!jac.ok()) throw InternalCheckError("rhoExtension: Jacobi identity fails on output");
  auto hc = checkHypercomplex(out.J[0], out.J[1], out.J[2], out.algebra);
  if (!hc.ok())
    throw InternalCheckError("rhoExtension: extended triple invalid: " + hc.summary());
  return out;
}

GeomStructure kaehlerToHkt(const GeomStructure& h, const Connection& d) {
  if (h.J.size() != 1 || !h.metric)
    throw AdmissibilityError("kaehlerToHkt: Hermitian input with a single J required");
  requireFlatCommuting(h, d, "kaehlerToHkt");
  const int n = h.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec tf = d.gamma[static_cast<size_t>(i - 1)] * h.algebra.basisVec(j) -
               d.gamma[static_cast<size_t>(j - 1)] * h.algebra.basisVec(i) -
               h.algebra.bracketBasis(i, j);
      if (!isZero(tf))
        throw AdmissibilityError("kaehlerToHkt: connection not torsion-free at (e" +
                                 std::to_string(i) + ", e" + std::to_string(j) + ")");
    }

  GeomStructure out{LieAlgebra(2 * n), std::nullopt, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec br = h.algebra.bracketBasis(i, j);
      Vec ext = Vec::Constant(2 * n, Scalar(0));
      ext.head(n) = br;
      out.algebra.setBracket(i, j, ext);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec dv = d.gamma[static_cast<size_t>(i - 1)] * h.algebra.basisVec(j);
      Vec ext = Vec::Constant(2 * n, Scalar(0));
      ext.tail(n) = dv;
      out.algebra.setBracket(i, n + j, ext);
    }

  const Endo& J = h.J[0];
  Endo j1 = Endo::Constant(2 * n, 2 * n, Scalar(0));
  j1.topLeftCorner(n, n) = J;
  j1.bottomRightCorner(n, n) = -J;
  Endo j2 = Endo::Constant(2 * n, 2 * n, Scalar(0));
  j2.topRightCorner(n, n) = Mat::Identity(n, n);
  j2.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  Endo j3 = j1 * j2;
  out.J = {j1, j2, j3};
  out.metric = Metric{blockDiag(h.metric->gram, h.metric->gram)};

  auto jac = out.algebra.jacobiDefect();
  if (!jac.ok()) throw InternalCheckError("kaehlerToHkt: Jacobi identity fails on output");
  auto hc = checkHypercomplex(out.J[0], out.J[1], out.J[2], out.algebra);
  if (!hc.ok())
    throw InternalCheckError("kaehlerToHkt: doubled triple invalid: " + hc.summary());

  // The doubling is HKT exactly when the input is Kaehler.
  bool baseKahler = ceDifferential(h.kaehlerForm(0), h.algebra).isZeroForm();
  bool lifted = hktCheck(out).hkt;
  if (baseKahler != lifted)
    throw InternalCheckError("kaehlerToHkt: HKT/Kaehler equivalence violated");
  return out;
}

Connection liftConnection(const Connection& d) {
  const int n = d.dim();
  Connection out;
  out.gamma.reserve(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i)
    out.gamma.push_back(blockDiag(d.gamma[static_cast<size_t>(i)], d.gamma[static_cast<size_t>(i)]));
  for (int i = 0; i < n; ++i)
    out.gamma.push_back(Mat::Constant(2 * n, 2 * n, Scalar(0)));
  return out;
}

GeomStructure iterateTangent(const GeomStructure& ts, const Connection& originalD) {
  requireTriple(ts, "iterateTangent");
  if (2 * originalD.dim() != ts.dim())
    throw AdmissibilityError("iterateTangent: structure is not a doubling of the connection's algebra");
  Connection lifted = liftConnection(originalD);
  // hyper-Hermitian: metric and all three lifted structures parallel
  const Mat& G = ts.metric->gram;
  for (int i = 0; i < ts.dim(); ++i) {
    const Mat& g0 = lifted.gamma[static_cast<size_t>(i)];
    if (!isZero(Mat(g0.transpose() * G + G * g0)))
      throw AdmissibilityError("iterateTangent: lifted connection not metric (direction e" +
                               std::to_string(i + 1) + ")");
  }
  return tangentAlgebra(ts, lifted);
}

}  // namespace hkt
