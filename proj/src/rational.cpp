#include "csp/rational.hpp"

#include <cctype>
#include <ostream>

#include "csp/error.hpp"

namespace csp {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty rational literal");
  }
  const auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den)) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational literal '" + std::string(text) + "'");
  }
  Rational r;
  r.v_ = mpq_class(mpz_class(num), mpz_class(den));
  if (r.v_.get_den() == 0) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  r.v_.canonicalize();
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace csp
