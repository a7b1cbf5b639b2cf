#include "hkt/lie.hpp"

namespace hkt {

void LieAlgebra::checkIndex(int i) const {
  if (i < 1 || i > dim_) throw DimensionMismatch("basis index out of range");
}

size_t LieAlgebra::pairIndex(int i, int j) const {
  // Pairs (i, j), i < j, ordered lexicographically.
  size_t a = static_cast<size_t>(i - 1);
  size_t n = static_cast<size_t>(dim_);
  return a * n - a * (a + 1) / 2 + static_cast<size_t>(j - i - 1);
}

void LieAlgebra::setBracket(int i, int j, Vec value) {
  checkIndex(i);
  checkIndex(j);
  if (i >= j) throw DimensionMismatch("setBracket requires i < j");
  if (value.size() != dim_) throw DimensionMismatch("setBracket: value dimension");
  table_[pairIndex(i, j)] = std::move(value);
}

void LieAlgebra::addBracketTerm(int i, int j, int k, const Scalar& c) {
  checkIndex(i);
  checkIndex(j);
  checkIndex(k);
  if (i >= j) throw DimensionMismatch("addBracketTerm requires i < j");
  table_[pairIndex(i, j)](k - 1) += c;
}

Vec LieAlgebra::bracketBasis(int i, int j) const {
  checkIndex(i);
  checkIndex(j);
  if (i == j) return Vec::Constant(dim_, Scalar(0));
  if (i < j) return table_[pairIndex(i, j)];
  return -table_[pairIndex(j, i)];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("bracket: vector dimension");
  Vec out = Vec::Constant(dim_, Scalar(0));
  for (int i = 1; i <= dim_; ++i) {
    if (x(i - 1).isZero() && y(i - 1).isZero()) continue;
    for (int j = i + 1; j <= dim_; ++j) {
      if (x(j - 1).isZero() && y(j - 1).isZero()) continue;
      const Vec& t = table_[pairIndex(i, j)];
      if (isZero(t)) continue;
      Scalar coeff = x(i - 1) * y(j - 1) - x(j - 1) * y(i - 1);
      if (!coeff.isZero()) out += coeff * t;
    }
  }
  return out;
}

JacobiReport LieAlgebra::jacobiDefect() const {
  JacobiReport rep;
  rep.worst = Scalar(0);
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = j + 1; k <= dim_; ++k) {
        Vec r = bracket(bracketBasis(i, j), basisVec(k)) +
                bracket(bracketBasis(j, k), basisVec(i)) +
                bracket(bracketBasis(k, i), basisVec(j));
        Scalar worst(0);
        for (int t = 0; t < dim_; ++t) {
          Scalar a = abs(r(t));
          if (worst < a) worst = a;
        }
        if (rep.worst < worst) {
          rep.worst = worst;
          rep.witness = {i, j, k};
        }
      }
  return rep;
}

bool LieAlgebra::isAbelian() const {
  for (const Vec& v : table_)
    if (!isZero(v)) return false;
  return true;
}

std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>>
LieAlgebra::structureConstants() const {
  std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>> out;
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j) {
      const Vec& t = table_[pairIndex(i, j)];
      std::vector<std::pair<int, Scalar>> terms;
      for (int k = 1; k <= dim_; ++k)
        if (!t(k - 1).isZero()) terms.emplace_back(k, t(k - 1));
      if (!terms.empty()) out.push_back({{i, j}, std::move(terms)});
    }
  return out;
}

Vec LieAlgebra::basisVec(int i) const {
  Vec v = Vec::Constant(dim_, Scalar(0));
  v(i - 1) = Scalar(1);
  return v;
}

}  // namespace hkt
