#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hkt {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(sqrt2)") {}
};

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt2), stored as two
/// exact rationals in lowest terms. Equality is componentwise; the order is
/// the one induced by the real embedding with sqrt(2) > 0.
class Scalar {
 public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int v) : a_(v), b_(0) {}
  Scalar(long v) : a_(v), b_(0) {}
  Scalar(long long v) : a_(v), b_(0) {}
  explicit Scalar(Rational a) : a_(std::move(a)), b_(0) {}
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
  static Scalar fraction(long long num, long long den) {
    if (den == 0) throw DivisionByZero();
    return Scalar(Rational(num, den));
  }
  /// num/den + snum/sden * sqrt2
  static Scalar of(long long num, long long den, long long snum, long long sden) {
    if (den == 0 || sden == 0) throw DivisionByZero();
    return Scalar(Rational(num, den), Rational(snum, sden));
  }

  const Rational& rat() const { return a_; }
  const Rational& sqrt2Coeff() const { return b_; }

  bool isZero() const { return a_ == 0 && b_ == 0; }
  bool isRational() const { return b_ == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_); }

  Scalar& operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Multiplicative inverse, via the field conjugate a - b*sqrt2.
  Scalar inverse() const {
    if (isZero()) throw DivisionByZero();
    Rational n = a_ * a_ - 2 * b_ * b_;  // nonzero: sqrt2 is irrational
    return Scalar(a_ / n, -b_ / n);
  }

  /// Sign in the real embedding: -1, 0 or +1.
  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    Rational n = a_ * a_ - 2 * b_ * b_;
    return sa * n.sign();
  }

  friend bool operator<(const Scalar& x, const Scalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  /// Lossy double rendering; display only, never used in computations.
  double approx() const;

  /// Canonical literal: `p`, `p/q`, or `<rat>+<rat>*sqrt2` / `<rat>-<rat>*sqrt2`.
  std::string str() const;

  /// Parses the literal grammar above. Returns nullopt on any syntax problem,
  /// including a zero denominator.
  static std::optional<Scalar> parse(std::string_view text);

 private:
  Rational a_, b_;
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hkt

namespace Eigen {

template <>
struct NumTraits<hkt::Scalar> {
  typedef hkt::Scalar Real;
  typedef hkt::Scalar NonInteger;
  typedef hkt::Scalar Nested;
  typedef hkt::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
