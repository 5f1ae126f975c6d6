#include "kholo/rational.hpp"

#include <cctype>
#include <ostream>

#include "kholo/error.hpp"

namespace kholo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::IncompleteSubstitution: return "IncompleteSubstitution";
    case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorKind::NonZSpace: return "NonZSpace";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DegreeZeroBoth: return "DegreeZeroBoth";
    case ErrorKind::BasepointNotFound: return "BasepointNotFound";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::LeadingCoefficientVanishes: return "LeadingCoefficientVanishes";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::PointOnLocus: return "PointOnLocus";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidEndpoints: return "InvalidEndpoints";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text, true)) throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(text) + "'");
    return Rational(mpz_class(std::string(text), 10));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(text) + "'");
  return Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

bool Rational::is_canonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_class n = ::abs(value_.get_num());
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), value_.get_den().get_mpz_t());
  return g == 1 || (n == 0 && value_.get_den() == 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

GaussianRational pow(const GaussianRational& base, std::uint32_t exponent) {
  GaussianRational result(1);
  GaussianRational square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::string to_string(const GaussianRational& a) {
  if (a.is_real()) return a.re().to_string();
  std::string im;
  if (a.im().is_one())
    im = "i";
  else if (a.im() == Rational(-1))
    im = "-i";
  else
    im = a.im().to_string() + "*i";
  if (a.re().is_zero()) return im;
  if (im.front() == '-') return a.re().to_string() + im;
  return a.re().to_string() + "+" + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << to_string(a); }

}  // namespace kholo
