#pragma once

#include <map>
#include <string>
#include <vector>

#include "hkt/lie.hpp"

namespace hkt {

/// Alternating k-linear form on the algebra, stored on strictly increasing
/// 1-based index tuples. Zero coefficients are never stored, so equality is
/// plain map equality.
class KForm {
 public:
  KForm(int dim, int degree) : dim_(dim), degree_(degree) {}

  static KForm monomial(int dim, std::vector<int> indices, Scalar coeff = Scalar(1));
  static KForm zero(int dim, int degree) { return KForm(dim, degree); }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool isZeroForm() const { return coeffs_.empty(); }

  const std::map<std::vector<int>, Scalar>& coefficients() const { return coeffs_; }

  /// Adds c * e^{indices}; indices need not be sorted, the permutation sign
  /// is absorbed; repeated indices contribute nothing.
  void add(std::vector<int> indices, Scalar c);

  /// Coefficient on a strictly increasing tuple.
  Scalar coeff(const std::vector<int>& sortedIndices) const;

  /// Evaluation on arbitrary vectors (degree-many of them).
  Scalar operator()(const std::vector<Vec>& args) const;
  Scalar onBasis(const std::vector<int>& indices) const;  // any order, signed

  KForm& operator+=(const KForm& o);
  KForm& operator*=(const Scalar& c);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator*(const Scalar& c, KForm f) { return f *= c; }
  friend KForm operator-(KForm a, const KForm& b) { return a += Scalar(-1) * b; }

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  /// Monomial-notation rendering, e.g. `2*e^{256} - e^{356}`.
  std::string str() const;

 private:
  int dim_;
  int degree_;
  std::map<std::vector<int>, Scalar> coeffs_;
};

KForm wedge(const KForm& a, const KForm& b);

/// Chevalley-Eilenberg differential for left-invariant forms:
/// d a (X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0, .., ^X_i, .., ^X_j, .., X_k).
KForm ceDifferential(const KForm& a, const LieAlgebra& g);

/// Pullback f(M., .., M.) along an endomorphism.
KForm pullback(const KForm& f, const Mat& m);

/// Gram matrix of the monomial basis of Lambda^k for the inner product
/// induced by the metric with inverse gramInv.
Mat lambdaGram(const Mat& gramInv, int dim, int degree);

std::vector<std::vector<int>> increasingTuples(int dim, int k);

}  // namespace hkt
