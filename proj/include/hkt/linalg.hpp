#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hkt/scalar.hpp"

namespace hkt {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

template <typename Derived>
bool isZero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).isZero()) return false;
  return true;
}

/// Row echelon form by exact Gaussian elimination with normalized pivot rows.
/// When requested, the transform satisfies T * A == R exactly, T invertible.
template <typename T>
struct EchelonForm {
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> R;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> transform;
  std::vector<Index> pivotCols;
  Index rank() const { return static_cast<Index>(pivotCols.size()); }
};

template <typename T>
EchelonForm<T> echelon(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A,
                       bool wantTransform = false) {
  using M = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  const Index rows = A.rows(), cols = A.cols();
  EchelonForm<T> out;
  out.R = A;
  if (wantTransform) out.transform = M::Identity(rows, rows);
  M& R = out.R;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i)
      if (!R(i, col).isZero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      R.row(piv).swap(R.row(row));
      if (wantTransform) out.transform.row(piv).swap(out.transform.row(row));
    }
    const T pivot = R(row, col);
    if (!(pivot == T(1))) {
      const T inv = T(1) / pivot;
      for (Index j = col; j < cols; ++j)
        if (!R(row, j).isZero()) R(row, j) *= inv;
      if (wantTransform)
        for (Index j = 0; j < rows; ++j)
          if (!out.transform(row, j).isZero()) out.transform(row, j) *= inv;
    }
    for (Index i = row + 1; i < rows; ++i) {
      const T factor = R(i, col);
      if (factor.isZero()) continue;
      for (Index j = col; j < cols; ++j)
        if (!R(row, j).isZero()) R(i, j) -= factor * R(row, j);
      if (wantTransform)
        for (Index j = 0; j < rows; ++j)
          if (!out.transform(row, j).isZero())
            out.transform(i, j) -= factor * out.transform(row, j);
    }
    out.pivotCols.push_back(col);
    ++row;
  }
  return out;
}

template <typename T>
Index rankOf(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A) {
  return echelon(A).rank();
}

/// Determinant of a square matrix, fraction-free.
inline Scalar determinant(const Mat& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant: matrix not square");
  const Index n = A.rows();
  if (n == 0) return Scalar(1);
  Mat M = A;
  Scalar prev(1);
  int swaps = 0;
  for (Index k = 0; k < n - 1; ++k) {
    Index piv = -1;
    for (Index i = k; i < n; ++i)
      if (!M(i, k).isZero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != k) {
      M.row(piv).swap(M.row(k));
      ++swaps;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      M(i, k) = Scalar(0);
    }
    prev = M(k, k);
  }
  Scalar det = M(n - 1, n - 1);
  return swaps % 2 ? -det : det;
}

enum class SolveKind { Unique, Inconsistent, Underdetermined };

/// Full affine description of the solutions of A x = b: a particular solution
/// plus a basis of the kernel (kernel has zero columns in the unique case).
struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  Vec particular;
  Mat kernel;
  Index solutionDim() const { return kernel.cols(); }
};

namespace detail {

// Back-substitutes one column of the echelon-reduced augmented system.
inline Vec backSubstitute(const Mat& R, const std::vector<Index>& pivots, Index cols,
                          const Vec& rhs) {
  Vec x = Vec::Constant(cols, Scalar(0));
  for (Index r = static_cast<Index>(pivots.size()) - 1; r >= 0; --r) {
    Scalar acc = rhs(r);
    for (Index j = pivots[static_cast<size_t>(r)] + 1; j < cols; ++j)
      acc -= R(r, j) * x(j);
    x(pivots[static_cast<size_t>(r)]) = acc / R(r, pivots[static_cast<size_t>(r)]);
  }
  return x;
}

}  // namespace detail

inline Mat nullspace(const Mat& A) {
  const Index cols = A.cols();
  auto ef = echelon<Scalar>(A);
  std::vector<Index> freeCols;
  {
    std::vector<bool> isPivot(static_cast<size_t>(cols), false);
    for (Index p : ef.pivotCols) isPivot[static_cast<size_t>(p)] = true;
    for (Index j = 0; j < cols; ++j)
      if (!isPivot[static_cast<size_t>(j)]) freeCols.push_back(j);
  }
  Mat K(cols, static_cast<Index>(freeCols.size()));
  for (size_t f = 0; f < freeCols.size(); ++f) {
    // Solve R x = 0 with x(free) = e_f.
    Vec rhs = Vec::Constant(ef.rank(), Scalar(0));
    for (Index r = 0; r < ef.rank(); ++r) rhs(r) = -ef.R(r, freeCols[f]);
    Vec x = detail::backSubstitute(ef.R, ef.pivotCols, cols, rhs);
    x(freeCols[f]) = Scalar(1);
    K.col(static_cast<Index>(f)) = x;
  }
  return K;
}

inline SolveResult linearSolve(const Mat& A, const Vec& b) {
  if (A.rows() != b.size()) throw DimensionMismatch("linearSolve: row count mismatch");
  const Index cols = A.cols();
  Mat aug(A.rows(), cols + 1);
  aug.leftCols(cols) = A;
  aug.col(cols) = b;
  auto ef = echelon<Scalar>(aug);
  SolveResult out;
  if (!ef.pivotCols.empty() && ef.pivotCols.back() == cols) {
    out.kind = SolveKind::Inconsistent;
    return out;
  }
  Vec rhs(ef.rank());
  for (Index r = 0; r < ef.rank(); ++r) rhs(r) = ef.R(r, cols);
  out.particular = detail::backSubstitute(ef.R, ef.pivotCols, cols, rhs);
  if (ef.rank() == cols) {
    out.kernel = Mat(cols, 0);
    out.kind = SolveKind::Unique;
  } else {
    out.kernel = nullspace(A);
    out.kind = SolveKind::Underdetermined;
  }
  return out;
}

inline std::optional<Mat> inverseOf(const Mat& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("inverseOf: matrix not square");
  const Index n = A.rows();
  Mat inv(n, n);
  auto ef = echelon<Scalar>(A, /*wantTransform=*/true);
  if (ef.rank() != n) return std::nullopt;
  for (Index c = 0; c < n; ++c) {
    Vec rhs(n);
    for (Index r = 0; r < n; ++r) rhs(r) = ef.transform(r, c);
    inv.col(c) = detail::backSubstitute(ef.R, ef.pivotCols, n, rhs);
  }
  return inv;
}

/// Maintains an independent set of vectors (as matrix rows) in echelon form,
/// remembering which inserted elements were kept.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(Index ambient) : ambient_(ambient) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }

  /// Returns true when v enlarged the span.
  bool insert(Vec v) {
    reduce(v);
    Index lead = leadingIndex(v);
    if (lead < 0) return false;
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return leadingIndex(v) < 0;
  }

 private:
  static Index leadingIndex(const Vec& v) {
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).isZero()) return i;
    return -1;
  }
  void reduce(Vec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v(leads_[r]);
      if (c.isZero()) continue;
      const Scalar factor = c / rows_[r](leads_[r]);
      v -= factor * rows_[r];
    }
  }
  Index ambient_;
  std::vector<Vec> rows_;
  std::vector<Index> leads_;
};

inline Vec flatten(const Mat& m) {
  Vec v(m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

/// Smallest subspace containing the generators and closed under the rule,
/// returned as a basis (a subset of generators and rule products).
inline std::vector<Mat> spanClosure(
    const std::vector<Mat>& generators,
    const std::function<Mat(const Mat&, const Mat&)>& rule) {
  if (generators.empty()) return {};
  const Index n = generators.front().rows();
  for (const Mat& g : generators)
    if (g.rows() != n || g.cols() != n)
      throw DimensionMismatch("spanClosure: generators of mixed dimension");
  IncrementalSpan span(n * n);
  std::vector<Mat> basis;
  std::vector<Mat> work;
  for (const Mat& g : generators)
    if (span.insert(flatten(g))) {
      basis.push_back(g);
      work.push_back(g);
    }
  while (!work.empty()) {
    std::vector<Mat> next;
    for (const Mat& w : work)
      for (size_t i = 0; i < basis.size(); ++i) {
        Mat p = rule(w, basis[i]);
        if (span.insert(flatten(p))) {
          basis.push_back(p);
          next.push_back(p);
        }
        Mat q = rule(basis[i], w);
        if (span.insert(flatten(q))) {
          basis.push_back(q);
          next.push_back(q);
        }
      }
    work = std::move(next);
  }
  return basis;
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

}  // namespace hkt
