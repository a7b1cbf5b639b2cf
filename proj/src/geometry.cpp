#include "hkt/geometry.hpp"

#include <functional>
#include <sstream>

namespace hkt {

namespace {

std::string idx2(int i, int j) {
  std::ostringstream os;
  os << "(e" << i << ", e" << j << ")";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool squaresToMinusId(const Endo& j) {
  const Index n = j.rows();
  return n == j.cols() && isZero(Mat(j * j + Mat::Identity(n, n)));
}

}  // namespace

// -- Metric -------------------------------------------------------------------

bool Metric::isSymmetric() const {
  return gram.rows() == gram.cols() && isZero(Mat(gram - gram.transpose()));
}

bool Metric::isPositiveDefinite() const {
  if (!isSymmetric()) return false;
  const Index n = gram.rows();
  for (Index k = 1; k <= n; ++k) {
    Mat lead = gram.topLeftCorner(k, k);
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

Mat Metric::inverse() const {
  auto inv = inverseOf(gram);
  if (!inv) throw ValidationError("metric gram matrix is singular");
  return *inv;
}

// -- Connection ---------------------------------------------------------------

Endo Connection::along(const Vec& x) const {
  const Index n = x.size();
  Endo out = Endo::Constant(n, n, Scalar(0));
  for (Index i = 0; i < n; ++i)
    if (!x(i).isZero()) out += x(i) * gamma[static_cast<size_t>(i)];
  return out;
}

// -- GeomStructure ------------------------------------------------------------

KForm GeomStructure::kaehlerForm(int alpha) const {
  if (!metric) throw ValidationError("kaehlerForm: metric absent");
  const Mat w = J.at(static_cast<size_t>(alpha)).transpose() * metric->gram;
  const int n = dim();
  KForm out(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!w(i - 1, j - 1).isZero()) out.add({i, j}, w(i - 1, j - 1));
  return out;
}

std::string CheckResult::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.what << " at " << i.witness << "; ";
  return os.str();
}

// -- tensors ------------------------------------------------------------------

std::map<std::pair<int, int>, Vec> nijenhuis(const Endo& J, const LieAlgebra& g) {
  if (!squaresToMinusId(J)) throw ValidationError("nijenhuis: J^2 != -id");
  const int n = g.dim();
  std::map<std::pair<int, int>, Vec> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec x = g.basisVec(i), y = g.basisVec(j);
      Vec jx = J.col(i - 1), jy = J.col(j - 1);
      Vec value = J * Vec(g.bracketRef(i, j) - g.bracket(jx, jy)) -
                  (g.bracket(jx, y) + g.bracket(x, jy));
      if (!isZero(value)) out[{i, j}] = value;
    }
  return out;
}

CheckResult checkHypercomplex(const Endo& J1, const Endo& J2, const Endo& J3,
                              const LieAlgebra& g) {
  CheckResult res;
  const Endo* js[3] = {&J1, &J2, &J3};
  for (int a = 0; a < 3; ++a)
    if (!squaresToMinusId(*js[a]))
      res.issues.push_back({"J" + std::to_string(a + 1) + "^2 != -id", "whole endomorphism"});
  if (!res.ok()) return res;
  if (!isZero(Mat(J1 * J2 - J3)))
    res.issues.push_back({"J1*J2 != J3", "quaternion relation"});
  if (!isZero(Mat(J2 * J1 + J3)))
    res.issues.push_back({"J2*J1 != -J3", "quaternion relation"});
  if (!res.ok()) return res;
  for (int a = 0; a < 3; ++a) {
    auto nj = nijenhuis(*js[a], g);
    if (!nj.empty()) {
      auto& [pair, val] = *nj.begin();
      res.issues.push_back({"J" + std::to_string(a + 1) + " not integrable",
                            "N" + idx2(pair.first, pair.second) + " != 0"});
    }
  }
  return res;
}

AbelianResult isAbelianHypercomplex(const Endo& J1, const Endo& J2, const Endo& J3,
                                    const LieAlgebra& g) {
  const Endo* js[3] = {&J1, &J2, &J3};
  const int n = g.dim();
  for (int a = 0; a < 3; ++a)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Vec lhs = g.bracket(js[a]->col(i - 1), js[a]->col(j - 1));
        if (lhs != g.bracketRef(i, j))
          return {false, "[J" + std::to_string(a + 1) + " e" + std::to_string(i) +
                             ", J" + std::to_string(a + 1) + " e" + std::to_string(j) +
                             "] != [e" + std::to_string(i) + ", e" + std::to_string(j) + "]"};
      }
  return {true, ""};
}

CheckResult validateStructure(const GeomStructure& s) {
  CheckResult res;
  auto jac = s.algebra.jacobiDefect();
  if (!jac.ok()) {
    auto w = *jac.witness;
    res.issues.push_back({"Jacobi identity fails",
                          "(e" + std::to_string(w[0]) + ", e" + std::to_string(w[1]) +
                              ", e" + std::to_string(w[2]) + "), residual max |.| = " +
                              jac.worst.str()});
    return res;
  }
  if (s.metric) {
    if (!s.metric->isSymmetric())
      res.issues.push_back({"metric not symmetric", "gram matrix"});
    else if (!s.metric->isPositiveDefinite())
      res.issues.push_back({"metric not positive-definite", "leading principal minor"});
  }
  if (s.J.size() != 0 && s.J.size() != 1 && s.J.size() != 3)
    res.issues.push_back({"structure must carry 0, 1 or 3 complex structures", ""});
  for (size_t a = 0; a < s.J.size(); ++a) {
    if (!squaresToMinusId(s.J[a])) {
      res.issues.push_back({"J" + std::to_string(a + 1) + "^2 != -id", ""});
      return res;
    }
    if (s.metric && !isZero(Mat(s.J[a].transpose() * s.metric->gram * s.J[a] - s.metric->gram)))
      res.issues.push_back(
          {"J" + std::to_string(a + 1) + " not compatible with the metric", ""});
  }
  if (s.J.size() == 3) {
    auto hc = checkHypercomplex(s.J[0], s.J[1], s.J[2], s.algebra);
    for (auto& issue : hc.issues)
      if (issue.what.find("not integrable") == std::string::npos)
        res.issues.push_back(issue);
  }
  return res;
}

// -- connections --------------------------------------------------------------

namespace {

// Tables of G*[e_i, e_j] style covectors, antisymmetric in (i, j).
struct PairTable {
  int n;
  std::vector<Vec> data;  // i < j
  PairTable(int dim) : n(dim), data(static_cast<size_t>(dim) * (dim - 1) / 2) {}
  size_t at(int i, int j) const {
    size_t a = static_cast<size_t>(i - 1);
    return a * static_cast<size_t>(n) - a * (a + 1) / 2 + static_cast<size_t>(j - i - 1);
  }
  void set(int i, int j, Vec v) { data[at(i, j)] = std::move(v); }
  Vec get(int i, int j) const {
    if (i == j) return Vec::Constant(n, Scalar(0));
    if (i < j) return data[at(i, j)];
    return -data[at(j, i)];
  }
  Scalar get(int i, int j, int z) const {
    if (i == j) return Scalar(0);
    if (i < j) return data[at(i, j)](z - 1);
    return -data[at(j, i)](z - 1);
  }
};

bool isDiagonal(const Mat& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (r != c && !m(r, c).isZero()) return false;
  return true;
}

// g(v, .) as a covector, with a cheap path for diagonal gram matrices.
struct GramApply {
  const Mat& G;
  bool diag;
  explicit GramApply(const Mat& gram) : G(gram), diag(isDiagonal(gram)) {}
  Vec operator()(const Vec& v) const {
    if (!diag) return G * v;
    Vec out = v;
    for (Index z = 0; z < v.size(); ++z)
      if (!(G(z, z) == Scalar(1))) out(z) *= G(z, z);
    return out;
  }
};

Connection assembleFromRhs(const GeomStructure& s,
                           const std::function<Scalar(int, int, int)>& rhs) {
  // rhs(i, j, z) = g(nabla_{e_i} e_j, e_z); columns solved with the exact
  // inverse gram matrix.
  const int n = s.dim();
  const Mat ginv = s.metric->inverse();
  const bool diag = isDiagonal(ginv);
  Connection c;
  c.gamma.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Mat m(n, n);
    for (int j = 1; j <= n; ++j)
      for (int z = 1; z <= n; ++z) m(z - 1, j - 1) = rhs(i, j, z);
    if (diag) {
      for (int z = 0; z < n; ++z)
        if (!(ginv(z, z) == Scalar(1))) m.row(z) *= ginv(z, z);
      c.gamma.push_back(std::move(m));
    } else {
      c.gamma.push_back(ginv * m);
    }
  }
  return c;
}

}  // namespace

Connection leviCivita(const GeomStructure& s) {
  if (!s.metric || !s.metric->isPositiveDefinite())
    throw ValidationError("leviCivita: positive-definite metric required");
  const int n = s.dim();
  const Mat& G = s.metric->gram;
  GramApply lower(G);
  PairTable gb(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gb.set(i, j, lower(s.algebra.bracketRef(i, j)));
  const Scalar half = Scalar::fraction(1, 2);
  Connection c = assembleFromRhs(s, [&](int i, int j, int z) {
    return half * (gb.get(i, j, z) - gb.get(j, z, i) + gb.get(z, i, j));
  });
  // Defining properties, re-verified.
  for (int i = 0; i < n; ++i) {
    const Mat& g0 = c.gamma[static_cast<size_t>(i)];
    if (!isZero(Mat(g0.transpose() * G + G * g0)))
      throw InternalCheckError("leviCivita: nabla g != 0");
  }
  auto t = torsion(c, s.algebra);
  if (!t.empty()) throw InternalCheckError("leviCivita: torsion != 0");
  return c;
}

Connection bismut(const GeomStructure& s, int alpha) {
  if (!s.metric) throw ValidationError("bismut: metric required");
  if (s.J.empty()) throw ValidationError("bismut: complex structure required");
  const Endo& J = s.J.at(static_cast<size_t>(alpha));
  if (!squaresToMinusId(J)) throw ValidationError("bismut: J^2 != -id");
  const int n = s.dim();
  const Mat& G = s.metric->gram;
  if (!isZero(Mat(J.transpose() * G * J - G)))
    throw ValidationError("bismut: (J, g) is not a Hermitian pair");

  GramApply lower(G);
  PairTable minus(n), plus(n);  // G*([e_i,e_j] -/+ [J e_i, J e_j])
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Vec& b = s.algebra.bracketRef(i, j);
      Vec jb = s.algebra.bracket(J.col(i - 1), J.col(j - 1));
      minus.set(i, j, lower(b - jb));
      plus.set(i, j, lower(b + jb));
    }
  const Scalar half = Scalar::fraction(1, 2);
  Connection c = assembleFromRhs(s, [&](int i, int j, int z) {
    return half * (minus.get(i, j, z) - plus.get(j, z, i) + minus.get(z, i, j));
  });
  for (int i = 0; i < n; ++i) {
    const Mat& g0 = c.gamma[static_cast<size_t>(i)];
    if (!isZero(Mat(g0.transpose() * G + G * g0)))
      throw InternalCheckError("bismut: nabla g != 0");
    if (!isZero(Mat(g0 * J - J * g0)))
      throw InternalCheckError("bismut: nabla J != 0");
  }
  return c;
}

std::map<std::pair<int, int>, Vec> torsion(const Connection& c, const LieAlgebra& g) {
  const int n = g.dim();
  if (c.dim() != n) throw DimensionMismatch("torsion: dimension mismatch");
  std::map<std::pair<int, int>, Vec> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec t = c.gamma[static_cast<size_t>(i - 1)].col(j - 1) -
              c.gamma[static_cast<size_t>(j - 1)].col(i - 1) - g.bracketRef(i, j);
      if (!isZero(t)) out[{i, j}] = t;
    }
  return out;
}

std::optional<KForm> torsionThreeForm(const Connection& c, const GeomStructure& s) {
  if (!s.metric) throw ValidationError("torsionThreeForm: metric required");
  const int n = s.dim();
  const Mat& G = s.metric->gram;
  auto tor = torsion(c, s.algebra);
  GramApply lowerWith(G);
  // Lowered tensor t(x; y, z) = g(e_x, T(e_y, e_z)) for y < z.
  PairTable lowered(n);
  for (int y = 1; y <= n; ++y)
    for (int z = y + 1; z <= n; ++z) {
      auto it = tor.find({y, z});
      lowered.set(y, z, it == tor.end() ? Vec::Constant(n, Scalar(0)) : lowerWith(it->second));
    }
  KForm out(n, 3);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z) {
        Scalar v = lowered.get(y, z)(x - 1);
        if (!v.isZero()) out.add({x, y, z}, v);
      }
  // Total antisymmetry of the lowered tensor against the alternating form.
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z) {
        Scalar expect = out.onBasis({x, y, z});
        if (lowered.get(y, z)(x - 1) != expect) return std::nullopt;
      }
  return out;
}

std::map<std::pair<int, int>, Endo> curvature(const Connection& c, const LieAlgebra& g) {
  const int n = g.dim();
  if (c.dim() != n) throw DimensionMismatch("curvature: dimension mismatch");
  std::vector<bool> zero(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) zero[static_cast<size_t>(i)] = isZero(c.gamma[static_cast<size_t>(i)]);
  std::map<std::pair<int, int>, Endo> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Endo r = Endo::Constant(n, n, Scalar(0));
      if (!zero[static_cast<size_t>(i - 1)] && !zero[static_cast<size_t>(j - 1)])
        r = commutator(c.gamma[static_cast<size_t>(i - 1)], c.gamma[static_cast<size_t>(j - 1)]);
      const Vec& br = g.bracketRef(i, j);
      if (!isZero(br)) r -= c.along(br);
      if (!isZero(r)) out[{i, j}] = r;
    }
  return out;
}

bool isFlat(const Connection& c, const LieAlgebra& g) { return curvature(c, g).empty(); }

std::vector<Endo> infinitesimalHolonomy(const Connection& c, const LieAlgebra& g) {
  const int n = g.dim();
  IncrementalSpan span(static_cast<Index>(n) * n);
  std::vector<Endo> basis;
  std::vector<Endo> work;
  auto push = [&](Endo m) {
    if (span.insert(flatten(m))) {
      basis.push_back(m);
      work.push_back(std::move(m));
    }
  };
  for (auto& [pair, r] : curvature(c, g)) push(r);
  int sweeps = 0;
  const int cap = n * n;
  while (!work.empty() && sweeps++ < cap) {
    std::vector<Endo> current = std::move(work);
    work.clear();
    for (const Endo& m : current) {
      for (int k = 0; k < n; ++k) push(commutator(c.gamma[static_cast<size_t>(k)], m));
      for (size_t b = 0; b < basis.size(); ++b) push(commutator(m, basis[b]));
    }
  }
  return basis;
}

HktResult hktCheck(const GeomStructure& s) {
  if (!s.hasTriple() || !s.metric)
    throw ValidationError("hktCheck: hyper-Hermitian structure required");
  const int n = s.dim();
  const Mat& G = s.metric->gram;

  // Route A: the bracket-sum identity on all basis triples, for the pairs
  // (alpha, beta) = (1, 2) and (2, 3).
  GramApply lower(G);
  std::array<PairTable, 3> tab{PairTable(n), PairTable(n), PairTable(n)};
  for (int a = 0; a < 3; ++a)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        tab[static_cast<size_t>(a)].set(
            i, j,
            lower(s.algebra.bracket(s.J[static_cast<size_t>(a)].col(i - 1),
                                    s.J[static_cast<size_t>(a)].col(j - 1))));
  auto cyc = [&](int a, int i, int j, int k) {
    const PairTable& t = tab[static_cast<size_t>(a)];
    return t.get(i, j, k) + t.get(j, k, i) + t.get(k, i, j);
  };
  bool routeA = true;
  for (int i = 1; i <= n && routeA; ++i)
    for (int j = i + 1; j <= n && routeA; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Scalar e1 = cyc(0, i, j, k), e2 = cyc(1, i, j, k);
        if (e1 != e2 || e2 != cyc(2, i, j, k)) {
          routeA = false;
          break;
        }
      }

  // Route B: sigma_a = d omega_a (J_a., J_a., J_a.) must agree for a = 1, 2, 3.
  KForm sigma1 = pullback(ceDifferential(s.kaehlerForm(0), s.algebra), s.J[0]);
  KForm sigma2 = pullback(ceDifferential(s.kaehlerForm(1), s.algebra), s.J[1]);
  KForm sigma3 = pullback(ceDifferential(s.kaehlerForm(2), s.algebra), s.J[2]);
  bool routeB = sigma1 == sigma2 && sigma2 == sigma3;

  if (routeA != routeB)
    throw InternalCheckError("hktCheck: bracket-sum and form routes disagree");
  return {routeA, routeA, routeB, sigma1};
}

KForm leeForm(const GeomStructure& s, const KForm& c, int alpha) {
  if (!s.metric) throw ValidationError("leeForm: metric required");
  if (c.degree() != 3) throw ValidationError("leeForm: torsion 3-form expected");
  const int n = s.dim();
  const Mat ginv = s.metric->inverse();
  const Endo& J = s.J.at(static_cast<size_t>(alpha));
  KForm theta(n, 1);
  const Scalar minusHalf = Scalar::fraction(-1, 2);
  for (int v = 1; v <= n; ++v) {
    Vec jv = J * s.algebra.basisVec(v);
    Scalar acc(0);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (ginv(i - 1, j - 1).isZero()) continue;
        Scalar val = c({jv, s.algebra.basisVec(i), Vec(J * s.algebra.basisVec(j))});
        if (!val.isZero()) acc += ginv(i - 1, j - 1) * val;
      }
    acc *= minusHalf;
    if (!acc.isZero()) theta.add({v}, acc);
  }
  return theta;
}

KForm codifferential(const KForm& beta, const GeomStructure& s) {
  if (!s.metric) throw ValidationError("codifferential: metric required");
  const int n = s.dim();
  const int k = beta.degree();
  if (k == 0) return KForm::zero(n, 0);
  const Mat ginv = s.metric->inverse();
  auto lower = increasingTuples(n, k - 1);
  auto upper = increasingTuples(n, k);
  // Matrix of d : Lambda^{k-1} -> Lambda^k in the monomial bases.
  Mat D = Mat::Constant(static_cast<Index>(upper.size()), static_cast<Index>(lower.size()),
                        Scalar(0));
  for (size_t c0 = 0; c0 < lower.size(); ++c0) {
    KForm da = ceDifferential(KForm::monomial(n, lower[c0]), s.algebra);
    for (size_t r = 0; r < upper.size(); ++r) {
      Scalar v = da.coeff(upper[r]);
      if (!v.isZero()) D(static_cast<Index>(r), static_cast<Index>(c0)) = v;
    }
  }
  Mat gramK = lambdaGram(ginv, n, k);
  Mat gramKm1 = lambdaGram(ginv, n, k - 1);
  Vec b = Vec::Constant(static_cast<Index>(upper.size()), Scalar(0));
  for (size_t r = 0; r < upper.size(); ++r) b(static_cast<Index>(r)) = beta.coeff(upper[r]);
  Vec rhs = D.transpose() * Vec(gramK * b);
  auto sol = linearSolve(gramKm1, rhs);
  if (sol.kind != SolveKind::Unique)
    throw InternalCheckError("codifferential: Lambda^k gram matrix not invertible");
  KForm out(n, k - 1);
  for (size_t r = 0; r < lower.size(); ++r)
    if (!sol.particular(static_cast<Index>(r)).isZero())
      out.add(lower[r], sol.particular(static_cast<Index>(r)));
  return out;
}

SpHomResult checkSpHomomorphism(const Connection& d, const GeomStructure& s) {
  if (!s.metric || !s.hasTriple())
    throw ValidationError("checkSpHomomorphism: hyper-Hermitian structure required");
  const int n = s.dim();
  const Mat& G = s.metric->gram;
  SpHomResult res;
  for (int i = 1; i <= n; ++i) {
    const Endo& di = d.gamma[static_cast<size_t>(i - 1)];
    if (!isZero(Mat(di.transpose() * G + G * di)))
      res.violations.push_back({"D_X not skew-symmetric w.r.t. g", "X = e" + std::to_string(i)});
    for (int a = 0; a < 3; ++a)
      if (!isZero(Mat(commutator(di, s.J[static_cast<size_t>(a)]))))
        res.violations.push_back({"[D_X, J" + std::to_string(a + 1) + "] != 0",
                                  "X = e" + std::to_string(i)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Endo lhs = d.along(s.algebra.bracketBasis(i, j));
      Endo rhs = commutator(d.gamma[static_cast<size_t>(i - 1)], d.gamma[static_cast<size_t>(j - 1)]);
      if (!isZero(Mat(lhs - rhs)))
        res.violations.push_back({"D_{[X,Y]} != [D_X, D_Y]", idx2(i, j)});
    }
  return res;
}

// -- Obata --------------------------------------------------------------------

namespace {

// Basis of { M : [M, J1] = [M, J2] = 0 } (then [M, J3] = 0 follows).
std::vector<Mat> commutantBasis(const Endo& J1, const Endo& J2) {
  const Index n = J1.rows();
  const Mat id = Mat::Identity(n, n);
  Mat K(2 * n * n, n * n);
  K.topRows(n * n) = kron(J1.transpose(), id) - kron(id, J1);
  K.bottomRows(n * n) = kron(J2.transpose(), id) - kron(id, J2);
  Mat null = nullspace(K);
  std::vector<Mat> basis;
  basis.reserve(static_cast<size_t>(null.cols()));
  for (Index c = 0; c < null.cols(); ++c) {
    Mat m(n, n);
    Index t = 0;
    for (Index col = 0; col < n; ++col)
      for (Index row = 0; row < n; ++row) m(row, col) = null(t++, c);
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

Connection obata(const Endo& J1, const Endo& J2, const Endo& J3, const LieAlgebra& g) {
  auto hc = checkHypercomplex(J1, J2, J3, g);
  if (!hc.ok()) throw ValidationError("obata: not a hypercomplex triple: " + hc.summary());
  const int n = g.dim();
  auto basis = commutantBasis(J1, J2);
  const Index m = static_cast<Index>(basis.size());
  // Unknowns x_{i,t}: nabla_{e_i} = sum_t x_{i,t} B_t, torsion-free constraints
  // nabla_{e_i} e_j - nabla_{e_j} e_i = [e_i, e_j] row by row.
  const Index pairs = static_cast<Index>(n) * (n - 1) / 2;
  Mat A = Mat::Constant(pairs * n, static_cast<Index>(n) * m, Scalar(0));
  Vec b(pairs * n);
  Index row = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec br = g.bracketBasis(i, j);
      for (int z = 0; z < n; ++z) b(row + z) = br(z);
      for (Index t = 0; t < m; ++t) {
        const Mat& bt = basis[static_cast<size_t>(t)];
        for (int z = 0; z < n; ++z) {
          A(row + z, (i - 1) * m + t) += bt(z, j - 1);
          A(row + z, (j - 1) * m + t) -= bt(z, i - 1);
        }
      }
      row += n;
    }
  auto sol = linearSolve(A, b);
  if (sol.kind == SolveKind::Inconsistent)
    throw ValidationError("obata: no torsion-free connection parallelizing the triple");
  if (sol.kind == SolveKind::Underdetermined)
    throw ValidationError("obata: connection not unique (solution space of dimension " +
                          std::to_string(sol.solutionDim()) + ")");
  Connection c;
  c.gamma.assign(static_cast<size_t>(n), Mat::Constant(n, n, Scalar(0)));
  for (int i = 0; i < n; ++i)
    for (Index t = 0; t < m; ++t) {
      const Scalar& x = sol.particular(i * m + t);
      if (!x.isZero()) c.gamma[static_cast<size_t>(i)] += x * basis[static_cast<size_t>(t)];
    }
  if (!torsion(c, g).empty()) throw InternalCheckError("obata: torsion != 0");
  for (int i = 0; i < n; ++i)
    for (const Endo* j : {&J1, &J2, &J3})
      if (!isZero(Mat(commutator(c.gamma[static_cast<size_t>(i)], *j))))
        throw InternalCheckError("obata: nabla J != 0");
  return c;
}

Connection obata(const GeomStructure& s) {
  if (!s.hasTriple()) throw ValidationError("obata: hypercomplex triple required");
  return obata(s.J[0], s.J[1], s.J[2], s.algebra);
}

// -- classification -----------------------------------------------------------

Report classify(const GeomStructure& s) {
  auto structural = validateStructure(s);
  if (!structural.ok())
    throw ValidationError("classify: invalid structure: " + structural.summary());

  Report r;
  const bool triple = s.hasTriple();
  if (!s.J.empty()) {
    bool allIntegrable = true;
    for (size_t a = 0; a < s.J.size(); ++a) {
      bool ok = nijenhuis(s.J[a], s.algebra).empty();
      r.integrable[a] = ok;
      allIntegrable = allIntegrable && ok;
    }
    if (triple) {
      r.hypercomplex = allIntegrable;
      if (allIntegrable) {
        auto ab = isAbelianHypercomplex(s.J[0], s.J[1], s.J[2], s.algebra);
        r.abelianHypercomplex = ab.abelian;
      }
    }
  }
  if (s.metric && !s.J.empty()) {
    r.hermitian = true;  // compatibility was validated above
    for (size_t a = 0; a < s.J.size(); ++a) {
      std::string key = triple ? "omega" + std::to_string(a + 1) : "omega";
      r.forms.emplace(key, s.kaehlerForm(static_cast<int>(a)));
    }
    KForm domega1 = ceDifferential(triple ? r.forms.at("omega1") : r.forms.at("omega"),
                                   s.algebra);
    r.kahler = domega1.isZeroForm();
    if (triple) r.hyperHermitian = r.hypercomplex.value_or(false);

    bool torsionDefined = triple ? r.hyperHermitian.value_or(false)
                                 : r.integrable[0].value_or(false);
    if (torsionDefined) {
      Connection b = bismut(s, 0);
      auto c = torsionThreeForm(b, s);
      if (!c) throw InternalCheckError("classify: Bismut torsion is not a 3-form");
      KForm dc = ceDifferential(*c, s.algebra);
      KForm theta = leeForm(s, *c, 0);
      KForm dtheta = ceDifferential(theta, s.algebra);
      KForm dstar = codifferential(*c, s);
      r.balanced = theta.isZeroForm();
      r.conformallyBalanced = dtheta.isZeroForm();
      r.torsionCoclosed = dstar.isZeroForm();
      if (triple) {
        auto hkt = hktCheck(s);
        r.hkt = hkt.hkt;
        r.strong = hkt.hkt && dc.isZeroForm();
        r.weak = hkt.hkt && !dc.isZeroForm();
        r.hyperKahler = hkt.hkt && c->isZeroForm();
        if (hkt.hkt && *c != hkt.sigma1)
          throw InternalCheckError(
              "classify: torsion 3-form differs from d omega_1 (J_1., J_1., J_1.)");
      }
      r.forms.emplace("c", std::move(*c));
      r.forms.emplace("dc", std::move(dc));
      r.forms.emplace("theta", std::move(theta));
      r.forms.emplace("dtheta", std::move(dtheta));
      r.forms.emplace("dstar_c", std::move(dstar));
    }
  }
  return r;
}

}  // namespace hkt
