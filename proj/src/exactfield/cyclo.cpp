#include "exactfield/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include <mpfr.h>

#include "exactfield/errors.hpp"

namespace winger::field {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly &p)
{
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

// Quotient and remainder of a by b over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly &b)
{
  trim(a);
  QPoly q;
  if (a.size() < b.size())
    return {q, a};
  q.assign(a.size() - b.size() + 1, Rational());
  Rational lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero())
      continue;
    Rational c = a[k] * lead_inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly &a, const QPoly &b)
{
  if (a.empty() || b.empty())
    return {};
  QPoly r(a.size() + b.size() - 1, Rational());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly &b)
{
  if (a.size() < b.size())
    a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<mpz_class> compute_cyclotomic(int n)
{
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    const auto &den = cyclotomic_polynomial(d);
    // Exact division by a monic integer polynomial.
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (std::size_t k = num.size(); k-- >= den.size();) {
      mpz_class c = num[k];
      std::size_t shift = k - (den.size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j)
        num[shift + j] -= c * den[j];
    }
    if (std::any_of(num.begin(), num.end(), [](const mpz_class &c) { return c != 0; }))
      throw InternalError("cyclotomic division left a remainder");
    num = std::move(q);
  }
  return num;
}

} // namespace

int totient(int n)
{
  if (n < 1)
    throw DomainError("totient of non-positive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      result -= result / p;
    }
  }
  if (m > 1)
    result -= result / m;
  return result;
}

const std::vector<mpz_class> &cyclotomic_polynomial(int n)
{
  if (n < 1)
    throw DomainError("cyclotomic polynomial of non-positive index");
  static std::recursive_mutex mutex;
  static std::map<int, std::vector<mpz_class>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

CycloNum::CycloNum()
: n_(1), coeffs_(1)
{}

CycloNum::CycloNum(const Rational &r)
: n_(1), coeffs_{r}
{}

CycloNum::CycloNum(std::int64_t v)
: CycloNum(Rational(v))
{}

CycloNum::CycloNum(int n, std::vector<Rational> coeffs)
: n_(n), coeffs_(std::move(coeffs))
{}

void CycloNum::reduce_from(std::vector<Rational> raw)
{
  const auto &phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > deg;) {
    if (raw[k].is_zero())
      continue;
    Rational c = raw[k];
    std::size_t shift = k - deg;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0)
        raw[shift + j] -= c * Rational(mpq_class(phi[j]));
    }
  }
  raw.resize(deg);
  coeffs_ = std::move(raw);
}

CycloNum CycloNum::make(int n, std::span<const Rational> raw)
{
  if (n < 1)
    throw DomainError("conductor must be positive");
  CycloNum r;
  r.n_ = n;
  r.reduce_from(std::vector<Rational>(raw.begin(), raw.end()));
  return r;
}

CycloNum CycloNum::make(int n, std::initializer_list<Rational> raw)
{
  return make(n, std::span<const Rational>(raw.begin(), raw.size()));
}

CycloNum CycloNum::zeta(int n, int k)
{
  if (n < 1)
    throw DomainError("conductor must be positive");
  int e = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1);
  raw[static_cast<std::size_t>(e)] = Rational(1);
  return make(n, raw);
}

CycloNum CycloNum::rational(int n, const Rational &r)
{
  return CycloNum(r).promote(n);
}

bool CycloNum::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c.is_zero(); });
}

bool CycloNum::is_one() const
{
  return coeffs_[0].is_one() &&
         std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational &c) { return c.is_zero(); });
}

bool CycloNum::is_rational() const
{
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational &c) { return c.is_zero(); });
}

Rational CycloNum::to_rational() const
{
  if (!is_rational())
    throw DomainError("cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

CycloNum CycloNum::promote(int n) const
{
  if (n == n_)
    return *this;
  if (n_ != 1)
    throw MismatchError("cannot change conductor " + std::to_string(n_) + " to " + std::to_string(n));
  std::vector<Rational> c(static_cast<std::size_t>(totient(n)));
  c[0] = coeffs_[0];
  return CycloNum(n, std::move(c));
}

namespace {

int common_conductor(int a, int b)
{
  if (a == b || b == 1)
    return a;
  if (a == 1)
    return b;
  throw MismatchError("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

CycloNum &CycloNum::operator+=(const CycloNum &o)
{
  int n = common_conductor(n_, o.n_);
  if (n != n_)
    *this = promote(n);
  if (o.n_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
  } else {
    coeffs_[0] += o.coeffs_[0];
  }
  return *this;
}

CycloNum &CycloNum::operator-=(const CycloNum &o)
{
  int n = common_conductor(n_, o.n_);
  if (n != n_)
    *this = promote(n);
  if (o.n_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] -= o.coeffs_[i];
  } else {
    coeffs_[0] -= o.coeffs_[0];
  }
  return *this;
}

CycloNum &CycloNum::operator*=(const CycloNum &o)
{
  int n = common_conductor(n_, o.n_);
  if (o.coeffs_.size() == 1) {
    if (n != n_)
      *this = promote(n);
    const Rational &s = o.coeffs_[0];
    for (auto &c : coeffs_)
      c *= s;
    return *this;
  }
  if (coeffs_.size() == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto &c : coeffs_)
      c *= s;
    return *this;
  }
  const std::size_t d = coeffs_.size();
  std::vector<Rational> raw(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!o.coeffs_[j].is_zero())
        raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_from(std::move(raw));
  return *this;
}

CycloNum CycloNum::operator-() const
{
  CycloNum r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

CycloNum CycloNum::inverse() const
{
  if (is_zero())
    throw DivisionByZero();
  if (is_rational()) {
    CycloNum r = *this;
    r.coeffs_[0] = coeffs_[0].inverse();
    return r;
  }
  // Extended Euclid: track s with s * a == r (mod Phi) until r is constant.
  const auto &phi_z = cyclotomic_polynomial(n_);
  QPoly phi;
  for (const auto &c : phi_z)
    phi.emplace_back(mpq_class(c));
  QPoly r0 = phi, r1 = coeffs_;
  QPoly s0, s1{Rational(1)};
  trim(r1);
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty())
    throw InternalError("cyclotomic polynomial shares a factor with a nonzero element");
  Rational scale = r1[0].inverse();
  for (auto &c : s1)
    c *= scale;
  return make(n_, s1);
}

CycloNum CycloNum::galois(int k) const
{
  if (std::gcd(k, n_) != 1)
    throw DomainError("galois exponent not coprime to conductor");
  if (n_ == 1)
    return *this;
  std::vector<Rational> raw(static_cast<std::size_t>(n_));
  int kk = ((k % n_) + n_) % n_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    raw[(i * static_cast<std::size_t>(kk)) % static_cast<std::size_t>(n_)] += coeffs_[i];
  return make(n_, raw);
}

CycloNum CycloNum::conj() const
{
  return galois(n_ - 1);
}

bool operator==(const CycloNum &a, const CycloNum &b)
{
  if (a.n_ == b.n_)
    return a.coeffs_ == b.coeffs_;
  int n = common_conductor(a.n_, b.n_);
  return a.promote(n).coeffs_ == b.promote(n).coeffs_;
}

std::strong_ordering operator<=>(const CycloNum &a, const CycloNum &b)
{
  if (a.n_ != b.n_) {
    int n = common_conductor(a.n_, b.n_);
    return a.promote(n) <=> b.promote(n);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    auto c = a.coeffs_[i] <=> b.coeffs_[i];
    if (c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

std::string CycloNum::to_string() const
{
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational &c = coeffs_[k];
    if (c.is_zero())
      continue;
    if (c.sign() < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Rational mag = c.abs();
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one())
      out += mag.to_string() + "*";
    out += "z";
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CycloNum CycloNum::parse(int n, std::string_view text)
{
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  }
  if (s.empty())
    throw DomainError("empty cyclotomic literal");
  std::vector<Rational> raw(1);
  std::size_t pos = 0;
  auto fail = [&]() { throw DomainError("malformed cyclotomic literal: '" + std::string(text) + "'"); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty())
      fail();
    Rational coef(1);
    std::size_t power = 0;
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coef = Rational::parse(term);
    } else {
      if (zpos > 0) {
        if (zpos < 2 || term[zpos - 1] != '*')
          fail();
        coef = Rational::parse(term.substr(0, zpos - 1));
      }
      std::string rest = term.substr(zpos + 1);
      if (rest.empty()) {
        power = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2 ||
            !std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          fail();
        power = std::stoul(rest.substr(1));
      }
    }
    if (raw.size() <= power)
      raw.resize(power + 1);
    raw[power] += sign < 0 ? -coef : coef;
  }
  return make(n, raw);
}

std::ostream &operator<<(std::ostream &os, const CycloNum &a)
{
  return os << a.to_string();
}

CycloNum sqrt5()
{
  return CycloNum::make(5, {0, 1, -1, -1, 1});
}

CycloNum golden_ratio()
{
  return CycloNum::make(5, {0, 0, -1, -1});
}

ComplexApprox cyclo_embed(const CycloNum &a, int digits)
{
  if (digits < 1)
    throw DomainError("digits must be at least 1");
  auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623) + 64);
  mpfr_t re, im, angle, c, s, q;
  mpfr_inits2(bits, re, im, angle, c, s, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  const int n = a.conductor();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const Rational &coef = a.coeffs()[k];
    if (coef.is_zero())
      continue;
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_ui(angle, angle, 2 * static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_div_ui(angle, angle, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpfr_set_q(q, coef.gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(c, c, q, MPFR_RNDN);
    mpfr_mul(s, s, q, MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  auto format = [digits](mpfr_t v) {
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, v);
    std::string out(buf);
    mpfr_free_str(buf);
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos)
      out.erase(0, 1);
    return out;
  };
  ComplexApprox out{format(re), format(im), {mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN)}};
  mpfr_clears(re, im, angle, c, s, q, static_cast<mpfr_ptr>(nullptr));
  return out;
}

} // namespace winger::field
