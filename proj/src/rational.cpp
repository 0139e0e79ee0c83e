#include "treelap/rational.hpp"

#include <cctype>
#include <ostream>

#include "treelap/error.hpp"

namespace treelap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long long n) {
  // mpq_class has no long long ctor; route through a decimal string.
  v_ = mpq_class(std::to_string(n));
}

Rational::Rational(long num, long den) {
  require(den != 0, Errc::parse_error, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::parse(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  require(!body.empty(), Errc::parse_error, "empty rational literal");

  mpz_class num, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view ns = body.substr(0, slash), ds = body.substr(slash + 1);
    require(all_digits(ns) && all_digits(ds), Errc::parse_error,
            "bad rational literal: " + std::string(s));
    num = mpz_class(std::string(ns));
    den = mpz_class(std::string(ds));
    require(den != 0, Errc::parse_error, "zero denominator in: " + std::string(s));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view is = body.substr(0, dot), fs = body.substr(dot + 1);
    require((is.empty() || all_digits(is)) && all_digits(fs), Errc::parse_error,
            "bad decimal literal: " + std::string(s));
    num = is.empty() ? mpz_class(0) : mpz_class(std::string(is));
    den = 1;
    for (size_t i = 0; i < fs.size(); ++i) { num *= 10; den *= 10; }
    num += mpz_class(std::string(fs));
  } else {
    require(all_digits(body), Errc::parse_error, "bad integer literal: " + std::string(s));
    num = mpz_class(std::string(body));
    den = 1;
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

std::string Rational::str() const {
  return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

double Rational::to_double() const { return v_.get_d(); }

long Rational::to_long() const {
  require(is_integer(), Errc::parse_error, "not an integer: " + str());
  require(v_.get_num().fits_slong_p(), Errc::parse_error, "integer overflow: " + str());
  return v_.get_num().get_si();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
  require(o.sign() != 0, Errc::singular, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace treelap
