#include "exactfield/rational.hpp"

#include <ostream>

#include "exactfield/errors.hpp"

namespace winger::field {

Rational::Rational(std::int64_t value)
: value_(mpz_class(static_cast<long>(value)))
{}

Rational::Rational(std::int64_t num, std::int64_t den)
: Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)))
{}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
  if (den == 0)
    throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value)
: value_(std::move(value))
{
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument &) {
    throw DomainError("malformed rational: '" + s + "'");
  }
}

Rational Rational::inverse() const
{
  if (is_zero())
    throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational Rational::abs() const
{
  return sign() < 0 ? -*this : *this;
}

Rational &Rational::operator/=(const Rational &o)
{
  if (o.is_zero())
    throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const
{
  return value_.get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
  return os << r.to_string();
}

} // namespace winger::field
