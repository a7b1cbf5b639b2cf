#include "hkt/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hkt {

namespace {

std::string ratStr(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

// Parses `p` or `p/q` with optional leading '-' (or '+' when allowSign).
// Advances pos past the consumed characters.
std::optional<Rational> parseRat(std::string_view s, size_t& pos, bool allowSign) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || (allowSign && s[pos] == '+'))) ++pos;
  size_t numStart = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == numStart) return std::nullopt;
  BigInt num(std::string(s.substr(start, pos - start)));
  BigInt den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t denStart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == denStart) return std::nullopt;
    den = BigInt(std::string(s.substr(denStart, pos - denStart)));
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace

double Scalar::approx() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * 1.4142135623730951;
}

std::string Scalar::str() const {
  if (b_ == 0) return ratStr(a_);
  std::string out = ratStr(a_);
  if (b_ > 0) {
    out += '+';
    out += ratStr(b_);
  } else {
    out += '-';
    out += ratStr(-b_);
  }
  out += "*sqrt2";
  return out;
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  size_t pos = 0;
  auto a = parseRat(text, pos, false);
  if (!a) return std::nullopt;
  if (pos == text.size()) return Scalar(*a);
  if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
  bool neg = text[pos] == '-';
  ++pos;
  auto b = parseRat(text, pos, false);
  if (!b) return std::nullopt;
  constexpr std::string_view kSuffix = "*sqrt2";
  if (text.substr(pos) != kSuffix) return std::nullopt;
  return Scalar(*a, neg ? Rational(-*b) : *b);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hkt
