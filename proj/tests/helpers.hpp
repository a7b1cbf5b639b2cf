#pragma once

#include <random>

#include "hkt/catalog.hpp"

namespace hkt::testing {

inline Scalar randomScalar(std::mt19937& rng, int bound = 6, bool withSqrt2 = true) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  Rational a(num(rng), den(rng));
  Rational b = withSqrt2 ? Rational(num(rng), den(rng)) : Rational(0);
  return Scalar(a, b);
}

inline Mat randomMatrix(std::mt19937& rng, int rows, int cols, int bound = 4) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = randomScalar(rng, bound);
  return m;
}

inline Vec randomVector(std::mt19937& rng, int n, int bound = 4) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = randomScalar(rng, bound);
  return v;
}

inline KForm randomForm(std::mt19937& rng, int dim, int degree, int terms = 4) {
  KForm f(dim, degree);
  std::uniform_int_distribution<int> idx(1, dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> tuple(static_cast<size_t>(degree));
    for (int s = 0; s < degree; ++s) tuple[static_cast<size_t>(s)] = idx(rng);
    f.add(tuple, randomScalar(rng));
  }
  return f;
}

}  // namespace hkt::testing
