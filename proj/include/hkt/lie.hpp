#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hkt/linalg.hpp"

namespace hkt {

struct JacobiReport {
  Scalar worst;                             // max |residual component| over basis triples
  std::optional<std::array<int, 3>> witness;  // 1-based offending triple
  bool ok() const { return !witness.has_value(); }
};

/// A finite-dimensional Lie algebra given by structure constants over Q(sqrt2).
/// Only pairs i < j are stored (1-based); the bracket antisymmetrizes.
class LieAlgebra {
 public:
  LieAlgebra() : LieAlgebra(1) {}
  explicit LieAlgebra(int dim) : dim_(dim), table_(pairCount(dim)) {
    if (dim <= 0) throw DimensionMismatch("LieAlgebra: dimension must be positive");
    for (auto& v : table_) v = Vec::Constant(dim, Scalar(0));
  }

  int dim() const { return dim_; }

  /// Sets [e_i, e_j] for 1 <= i < j <= dim.
  void setBracket(int i, int j, Vec value);
  void addBracketTerm(int i, int j, int k, const Scalar& c);

  /// [e_i, e_j] for any pair of (1-based) basis indices.
  Vec bracketBasis(int i, int j) const;

  /// [e_i, e_j] for 1 <= i < j <= dim, without copying.
  const Vec& bracketRef(int i, int j) const { return table_[pairIndex(i, j)]; }

  Vec bracket(const Vec& x, const Vec& y) const;

  JacobiReport jacobiDefect() const;
  bool isAbelian() const;

  /// e_i as a coordinate vector (1-based).
  Vec basisVec(int i) const;

  /// Canonical listing: ((i, j), [(k, c), ...]) sorted, zero terms absent.
  std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>>
  structureConstants() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim_ != b.dim_) return false;
    for (size_t t = 0; t < a.table_.size(); ++t)
      if (a.table_[t] != b.table_[t]) return false;
    return true;
  }

 private:
  static size_t pairCount(int dim) {
    return static_cast<size_t>(dim) * static_cast<size_t>(dim - 1) / 2;
  }
  size_t pairIndex(int i, int j) const;  // requires 1 <= i < j <= dim
  void checkIndex(int i) const;

  int dim_;
  std::vector<Vec> table_;
};

}  // namespace hkt
