#include "geometry/discriminant.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <optional>
#include <thread>

#include "exactfield/errors.hpp"

namespace winger::geometry {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using QPoly = std::vector<mpq_class>;

void trim(QPoly &p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

mpq_class evaluate(const QPoly &p, const mpq_class &x)
{
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Newton interpolation through (k, values[k]), k = 0..n-1.
QPoly interpolate(const std::vector<mpz_class> &values)
{
  const std::size_t n = values.size();
  std::vector<mpq_class> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<long>(level));
  QPoly out{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // out = out * (x - i) + dd[i]
    QPoly next(out.size() + 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] -= out[j] * static_cast<long>(i);
    }
    next[0] += dd[i];
    out = std::move(next);
  }
  trim(out);
  return out;
}

QPoly divide_exact(QPoly num, const QPoly &den)
{
  if (den.empty())
    throw CheckError("extraneous factor vanishes identically");
  if (num.size() < den.size())
    return num.empty() ? QPoly{} : throw CheckError("resultant quotient is not a polynomial");
  QPoly q(num.size() - den.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = num[k + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j)
      num[k + j] -= q[k] * den[j];
  }
  trim(num);
  if (!num.empty())
    throw CheckError("resultant quotient is not a polynomial");
  return q;
}

// Divides by (x - r) when r is a root.
bool divide_root(QPoly &p, const mpq_class &r)
{
  if (p.empty() || evaluate(p, r) != 0)
    return false;
  QPoly q(p.size() - 1);
  mpq_class carry = 0;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = p[k] + carry * r;
    q[k - 1] = carry;
  }
  p = std::move(q);
  return true;
}

// Integer coefficient rows of x^shift * g for a rational homogeneous g.
std::vector<std::pair<inv::Exponent, mpz_class>> integer_terms(const Poly3 &g, const mpz_class &scale)
{
  std::vector<std::pair<inv::Exponent, mpz_class>> out;
  for (const auto &[e, c] : g.terms()) {
    if (!c.is_rational())
      throw DomainError("discriminant needs a pencil with rational coefficients");
    mpq_class v = c.to_rational().gmp() * scale;
    if (v.get_den() != 1)
      throw InternalError("coefficient scaling failed");
    out.emplace_back(e, v.get_num());
  }
  return out;
}

mpz_class common_denominator(const Poly3 &g)
{
  mpz_class l = 1;
  for (const auto &[e, c] : g.terms()) {
    if (!c.is_rational())
      throw DomainError("discriminant needs a pencil with rational coefficients");
    mpz_class d = c.to_rational().denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

} // namespace

mpz_class integer_det(IntMatrix m)
{
  const std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw DomainError("determinant of a non-square matrix");
  if (n == 0)
    return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::string DiscriminantReport::to_string() const
{
  std::string s = "degree " + std::to_string(degree()) + " of " + std::to_string(expected_degree) + "; roots";
  for (const auto &[r, m] : roots)
    s += " " + r.to_string() + "^" + std::to_string(m);
  if (infinity_is_root())
    s += " inf^" + std::to_string(expected_degree - degree());
  s += roots_exhaust ? "; no other roots" : "; further roots remain";
  return s;
}

namespace {

struct MacaulaySystem
{
  // M(lambda) = a + lambda b
  IntMatrix a, b;
  std::vector<std::size_t> extraneous;

  IntMatrix at(long lambda) const
  {
    IntMatrix m(a.size(), std::vector<mpz_class>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        m[i][j] = a[i][j] + lambda * b[i][j];
    return m;
  }

  IntMatrix minor(const IntMatrix &m) const
  {
    IntMatrix e(extraneous.size(), std::vector<mpz_class>(extraneous.size()));
    for (std::size_t i = 0; i < extraneous.size(); ++i)
      for (std::size_t j = 0; j < extraneous.size(); ++j)
        e[i][j] = m[extraneous[i]][extraneous[j]];
    return e;
  }
};

MacaulaySystem macaulay_system(const Poly3 &q3, const Poly3 &f)
{
  const int d = q3.degree();
  const mpz_class scale = [&] {
    mpz_class a = common_denominator(q3), b = common_denominator(f), l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
  }();

  // row for the column monomial m: x^(m - (d-1) e_i) dP/dz_i, i least with m_i >= d - 1
  const int pd = d - 1, top = 3 * (pd - 1) + 1;
  const auto cols = inv::monomials(top);
  const std::size_t n = cols.size();
  std::map<inv::Exponent, std::size_t> col_of;
  for (std::size_t j = 0; j < n; ++j)
    col_of[cols[j]] = j;

  std::array<std::vector<std::pair<inv::Exponent, mpz_class>>, 3> dq, df;
  for (int i = 0; i < 3; ++i) {
    dq[static_cast<std::size_t>(i)] = integer_terms(q3.derivative(i), scale);
    df[static_cast<std::size_t>(i)] = integer_terms(f.derivative(i), scale);
  }
  MacaulaySystem sys{IntMatrix(n, std::vector<mpz_class>(n)), IntMatrix(n, std::vector<mpz_class>(n)), {}};
  for (std::size_t r = 0; r < n; ++r) {
    const auto &m = cols[r];
    int big = 0, first = -1;
    for (int i = 0; i < 3; ++i)
      if (m[static_cast<std::size_t>(i)] >= pd) {
        ++big;
        if (first < 0)
          first = i;
      }
    if (big >= 2)
      sys.extraneous.push_back(r);
    inv::Exponent shift = m;
    shift[static_cast<std::size_t>(first)] -= pd;
    auto place = [&](IntMatrix &target, const auto &terms) {
      for (const auto &[e, c] : terms)
        target[r][col_of.at({e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]})] = c;
    };
    place(sys.a, dq[static_cast<std::size_t>(first)]);
    place(sys.b, df[static_cast<std::size_t>(first)]);
  }
  return sys;
}

// Integer coordinate changes tried in turn until the extraneous minor is
// not identically zero. The singular members do not depend on coordinates.
std::vector<MatrixF> coordinate_changes()
{
  return {MatrixF::identity(3), MatrixF{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, MatrixF{{1, 2, 3}, {0, 1, 4}, {5, 0, 1}},
          MatrixF{{2, -1, 3}, {1, 3, -2}, {-4, 1, 5}}};
}

} // namespace

DiscriminantReport pencil_discriminant(const Pencil &pencil, const std::vector<Rational> &candidates, unsigned threads)
{
  const int d = pencil.f().degree();
  if (d < 2 || pencil.q().degree() * 3 != d || !pencil.q().is_homogeneous() || !pencil.f().is_homogeneous())
    throw DomainError("pencil members must be homogeneous of one degree");

  std::optional<MacaulaySystem> found;
  for (const auto &change : coordinate_changes()) {
    MacaulaySystem sys =
        macaulay_system(inv::act_on_poly(change, pencil.q()).pow(3), inv::act_on_poly(change, pencil.f()));
    for (long probe : {2, 3, 7})
      if (integer_det(sys.minor(sys.at(probe))) != 0) {
        found = std::move(sys);
        break;
      }
    if (found)
      break;
  }
  if (!found)
    throw CheckError("extraneous factor vanishes in every coordinate system tried");
  const MacaulaySystem &sys = *found;
  const std::size_t n = sys.a.size();
  const int pd = d - 1;

  const std::size_t checks = 4, points = n + 1 + checks;
  std::vector<mpz_class> det_m(points), det_e(points);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < points;) {
      IntMatrix m = sys.at(static_cast<long>(k));
      det_e[k] = integer_det(sys.minor(m));
      det_m[k] = integer_det(std::move(m));
    }
  };
  unsigned count = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < count; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();

  // interpolate on the first n + 1 points, confirm on the rest
  auto fit = [&](const std::vector<mpz_class> &values) {
    QPoly p = interpolate({values.begin(), values.begin() + static_cast<long>(n + 1)});
    for (std::size_t k = n + 1; k < points; ++k)
      if (evaluate(p, mpq_class(static_cast<long>(k))) != values[k])
        throw CheckError("interpolated determinant disagrees at a check point");
    return p;
  };
  QPoly res = divide_exact(fit(det_m), fit(det_e));
  if (res.empty())
    throw CheckError("resultant vanishes identically");

  DiscriminantReport out;
  out.expected_degree = 3 * pd * pd;
  out.evaluation_points = static_cast<int>(points);
  mpq_class lead = res.back();
  for (auto &c : res)
    c /= lead;
  for (const auto &c : res)
    out.coefficients.emplace_back(c);
  if (out.degree() > out.expected_degree)
    throw CheckError("resultant exceeds its degree bound");

  QPoly rest = res;
  for (const auto &r : candidates) {
    int mult = 0;
    while (divide_root(rest, r.gmp()))
      ++mult;
    if (mult > 0)
      out.roots.emplace_back(r, mult);
  }
  out.roots_exhaust = rest.size() == 1;
  return out;
}

} // namespace winger::geometry
