#include "hkt/kform.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hkt {

namespace {

// Sorts indices, returns the permutation sign; 0 on repeats.
int normalize(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

}  // namespace

std::vector<std::vector<int>> increasingTuples(int dim, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > dim) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == dim - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

KForm KForm::monomial(int dim, std::vector<int> indices, Scalar coeff) {
  KForm f(dim, static_cast<int>(indices.size()));
  f.add(std::move(indices), std::move(coeff));
  return f;
}

void KForm::add(std::vector<int> indices, Scalar c) {
  if (static_cast<int>(indices.size()) != degree_)
    throw DimensionMismatch("KForm::add: wrong arity");
  for (int i : indices)
    if (i < 1 || i > dim_) throw DimensionMismatch("KForm::add: index out of range");
  int sign = normalize(indices);
  if (sign == 0 || c.isZero()) return;
  if (sign < 0) c = -c;
  auto it = coeffs_.find(indices);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(indices), std::move(c));
  } else {
    it->second += c;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

Scalar KForm::coeff(const std::vector<int>& sortedIndices) const {
  auto it = coeffs_.find(sortedIndices);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

Scalar KForm::onBasis(const std::vector<int>& indices) const {
  std::vector<int> idx = indices;
  int sign = normalize(idx);
  if (sign == 0) return Scalar(0);
  Scalar c = coeff(idx);
  return sign < 0 ? -c : c;
}

Scalar KForm::operator()(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw DimensionMismatch("KForm: wrong argument count");
  for (const Vec& v : args)
    if (v.size() != dim_) throw DimensionMismatch("KForm: argument dimension");
  const int k = degree_;
  // Sparse arguments: expand multilinearly over the nonzero entries.
  long work = 1;
  std::vector<std::vector<int>> support(static_cast<size_t>(k));
  for (int s = 0; s < k && work <= 128; ++s) {
    for (int i = 1; i <= dim_; ++i)
      if (!args[static_cast<size_t>(s)](i - 1).isZero()) support[static_cast<size_t>(s)].push_back(i);
    work *= std::max<long>(1, static_cast<long>(support[static_cast<size_t>(s)].size()));
  }
  if (work <= 128) {
    Scalar total(0);
    std::vector<int> pick(static_cast<size_t>(k));
    std::function<void(int, Scalar)> rec = [&](int slot, Scalar acc) {
      if (slot == k) {
        Scalar v = onBasis(pick);
        if (!v.isZero()) total += acc * v;
        return;
      }
      for (int i : support[static_cast<size_t>(slot)]) {
        pick[static_cast<size_t>(slot)] = i;
        rec(slot + 1, acc * args[static_cast<size_t>(slot)](i - 1));
      }
    };
    rec(0, Scalar(1));
    return total;
  }
  // Dense arguments: determinant expansion per stored monomial.
  Scalar total(0);
  for (const auto& [idx, c] : coeffs_) {
    Mat sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) sub(r, s) = args[static_cast<size_t>(s)](idx[static_cast<size_t>(r)] - 1);
    Scalar d = determinant(sub);
    if (!d.isZero()) total += c * d;
  }
  return total;
}

KForm& KForm::operator+=(const KForm& o) {
  if (o.dim_ != dim_ || o.degree_ != degree_)
    throw DimensionMismatch("KForm sum: shape mismatch");
  for (const auto& [idx, c] : o.coeffs_) add(idx, c);
  return *this;
}

KForm& KForm::operator*=(const Scalar& c) {
  if (c.isZero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [idx, v] : coeffs_) v *= c;
  return *this;
}

std::string KForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool compact = dim_ <= 9;
  bool first = true;
  for (const auto& [idx, c] : coeffs_) {
    Scalar shown = c;
    if (first) {
      first = false;
      if (c.sign() < 0 && c.isRational()) {
        os << '-';
        shown = -c;
      }
    } else if (c.sign() < 0 && c.isRational()) {
      os << " - ";
      shown = -c;
    } else {
      os << " + ";
    }
    if (shown != Scalar(1)) {
      bool wrap = !shown.isRational();
      if (wrap) os << '(';
      os << shown.str();
      if (wrap) os << ')';
      os << '*';
    }
    os << "e^{";
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i && !compact) os << ' ';
      os << idx[i];
    }
    os << '}';
  }
  return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge: dimension mismatch");
  int deg = a.degree() + b.degree();
  if (deg > a.dim()) return KForm::zero(a.dim(), std::min(deg, a.dim()));
  KForm out(a.dim(), deg);
  for (const auto& [ia, ca] : a.coefficients())
    for (const auto& [ib, cb] : b.coefficients()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(std::move(idx), ca * cb);
    }
  return out;
}

KForm ceDifferential(const KForm& a, const LieAlgebra& g) {
  const int dim = g.dim();
  const int k = a.degree();
  if (k >= dim) return KForm::zero(dim, std::min(k + 1, dim));
  KForm out(dim, k + 1);
  for (const auto& tuple : increasingTuples(dim, k + 1)) {
    Scalar val(0);
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        const Vec& br = g.bracketRef(tuple[static_cast<size_t>(p)], tuple[static_cast<size_t>(q)]);
        if (isZero(br)) continue;
        // a([X_p, X_q], remaining basis vectors), expanded linearly in slot 0.
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(k));
        rest.push_back(0);  // placeholder for the bracket component
        for (int t = 0; t <= k; ++t)
          if (t != p && t != q) rest.push_back(tuple[static_cast<size_t>(t)]);
        Scalar term(0);
        for (int m = 1; m <= dim; ++m) {
          if (br(m - 1).isZero()) continue;
          rest[0] = m;
          Scalar v = a.onBasis(rest);
          if (!v.isZero()) term += br(m - 1) * v;
        }
        if ((p + q) % 2) term = -term;
        val += term;
      }
    if (!val.isZero()) out.add(tuple, val);
  }
  return out;
}

KForm pullback(const KForm& f, const Mat& m) {
  const int dim = f.dim();
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionMismatch("pullback: endomorphism shape");
  const int k = f.degree();
  KForm out(dim, k);
  std::vector<Vec> args(static_cast<size_t>(k));
  for (const auto& tuple : increasingTuples(dim, k)) {
    for (int s = 0; s < k; ++s) args[static_cast<size_t>(s)] = m.col(tuple[static_cast<size_t>(s)] - 1);
    Scalar v = f(args);
    if (!v.isZero()) out.add(tuple, v);
  }
  return out;
}

Mat lambdaGram(const Mat& gramInv, int dim, int degree) {
  auto tuples = increasingTuples(dim, degree);
  const Index n = static_cast<Index>(tuples.size());
  bool diag = true;
  for (Index r = 0; r < gramInv.rows() && diag; ++r)
    for (Index c = 0; c < gramInv.cols(); ++c)
      if (r != c && !gramInv(r, c).isZero()) {
        diag = false;
        break;
      }
  if (diag) {
    // <e^I, e^K> = 0 for I != K; on the diagonal it is the product of g^{ii}.
    Mat G = Mat::Constant(n, n, Scalar(0));
    for (Index r = 0; r < n; ++r) {
      Scalar prod(1);
      for (int p = 0; p < degree; ++p)
        prod *= gramInv(tuples[static_cast<size_t>(r)][static_cast<size_t>(p)] - 1,
                        tuples[static_cast<size_t>(r)][static_cast<size_t>(p)] - 1);
      G(r, r) = prod;
    }
    return G;
  }
  Mat G(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      Mat sub(degree, degree);
      for (int p = 0; p < degree; ++p)
        for (int q = 0; q < degree; ++q)
          sub(p, q) = gramInv(tuples[static_cast<size_t>(r)][static_cast<size_t>(p)] - 1,
                              tuples[static_cast<size_t>(c)][static_cast<size_t>(q)] - 1);
      G(r, c) = determinant(sub);
    }
  return G;
}

}  // namespace hkt
