#include "geometry/group.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include "exactfield/errors.hpp"

namespace winger::geometry {

namespace {

// Equations (l_src * M) x l_dst = 0 in the nine unknowns M(j, k) = x[3j + k].
void add_line_equations(MatrixF &sys, std::size_t row0, const LineForm &src, const LineForm &dst)
{
  static constexpr std::size_t pairs[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (std::size_t r = 0; r < 3; ++r) {
    const std::size_t a = pairs[r][0], b = pairs[r][1];
    for (std::size_t j = 0; j < 3; ++j) {
      sys(row0 + r, 3 * j + a) += src.coeffs[j] * dst.coeffs[b];
      sys(row0 + r, 3 * j + b) -= src.coeffs[j] * dst.coeffs[a];
    }
  }
}

std::optional<MatrixF> solve_for(const std::vector<LineForm> &lines, const Perm &sigma)
{
  const std::size_t n = lines.size();
  MatrixF sys(3 * n, 9);
  for (std::size_t i = 0; i < n; ++i)
    add_line_equations(sys, 3 * i, lines[static_cast<std::size_t>(sigma(static_cast<int>(i)))], lines[i]);
  auto ker = linalg::kernel(sys);
  if (ker.empty())
    return std::nullopt;
  if (ker.size() > 1)
    throw CheckError("line configuration admits a " + std::to_string(ker.size()) + "-dimensional family of maps");
  MatrixF m(3, 3, ker.front());
  const CycloNum d = linalg::det(m);
  if (d.is_zero())
    throw CheckError("singular solution for line permutation " + sigma.to_string());

  const MatrixF a = gram_matrix();
  const MatrixF g = m.transpose() * a * m;
  const CycloNum c = g(2, 2);
  if (g != a * c)
    throw CheckError("line symmetry " + sigma.to_string() + " does not preserve the conic up to scale");
  // (sM)^T A (sM) = s^2 c A and det(sM) = s^3 det M
  const CycloNum s = c / d;
  if (s * s * c != CycloNum(1) || s * s * s * d != CycloNum(1))
    throw CheckError("no normalizing scalar in the field for line permutation " + sigma.to_string());
  return m * s;
}

} // namespace

LineSearch search_line_symmetries(const std::vector<LineForm> &lines, int threads)
{
  std::vector<int> im(lines.size());
  std::iota(im.begin(), im.end(), 0);
  std::vector<Perm> sigmas;
  do {
    sigmas.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));

  std::vector<std::optional<MatrixF>> results(sigmas.size());
  std::vector<std::exception_ptr> errors(sigmas.size());
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, sigmas.size());
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < sigmas.size(); i += workers) {
      try {
        results[i] = solve_for(lines, sigmas[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w)
    pool.emplace_back(work, w);
  work(0);
  for (auto &t : pool)
    t.join();
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  LineSearch out;
  out.permutations_tried = sigmas.size();
  for (std::size_t i = 0; i < sigmas.size(); ++i)
    if (results[i]) {
      out.matrices.push_back(std::move(*results[i]));
      out.line_perms.push_back(sigmas[i]);
    }
  return out;
}

LineSearch search_line_symmetries()
{
  return search_line_symmetries(six_lines());
}

std::size_t IcosaGroup::index_of(const MatrixF &m) const
{
  auto it = index.find(m);
  if (it == index.end())
    throw CheckError("matrix is not a group element");
  return it->second;
}

std::vector<std::size_t> IcosaGroup::class_sizes() const
{
  std::vector<std::size_t> out;
  for (const auto &c : classes)
    out.push_back(c.size());
  return out;
}

IcosaGroup analyze_group(std::vector<MatrixF> matrices)
{
  IcosaGroup g;
  g.elements = std::move(matrices);
  const std::size_t n = g.elements.size();
  if (n != 60)
    throw CheckError("expected 60 group elements, found " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (!g.index.emplace(g.elements[i], i).second)
      throw CheckError("repeated matrix in group");
  const std::size_t e = g.index_of(MatrixF::identity(3));

  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = g.index.find(g.elements[i] * g.elements[j]);
      if (it == g.index.end())
        throw CheckError("matrices are not closed under multiplication");
      g.table[i][j] = it->second;
    }
  g.inverse.assign(n, n);
  g.orders.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (g.table[i][j] == e)
        g.inverse[i] = j;
    std::size_t p = i;
    int k = 1;
    while (p != e) {
      p = g.table[p][i];
      ++k;
    }
    g.orders[i] = k;
  }

  // Klein four-subgroups {1, a, b, ab}
  std::set<std::vector<std::size_t>> kleins;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.orders[a] == 2 && g.orders[b] == 2 && g.table[a][b] == g.table[b][a]) {
        std::vector<std::size_t> v{e, a, b, g.table[a][b]};
        std::sort(v.begin(), v.end());
        kleins.insert(v);
      }
  if (kleins.size() != 5)
    throw CheckError("expected 5 Klein four-subgroups, found " + std::to_string(kleins.size()));
  const std::vector<std::vector<std::size_t>> klein(kleins.begin(), kleins.end());

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<int> im;
    for (const auto &v : klein) {
      std::vector<std::size_t> c;
      for (std::size_t y : v)
        c.push_back(g.table[g.table[x][y]][g.inverse[x]]);
      std::sort(c.begin(), c.end());
      im.push_back(static_cast<int>(std::find(klein.begin(), klein.end(), c) - klein.begin()));
    }
    g.to_a5.emplace_back(std::move(im));
  }
  std::set<Perm> image(g.to_a5.begin(), g.to_a5.end());
  if (image.size() != n || !std::all_of(image.begin(), image.end(), [](const Perm &p) { return p.is_even(); }))
    throw CheckError("conjugation action on Klein four-subgroups is not an isomorphism onto A5");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.to_a5[g.table[a][b]] != perm::compose(g.to_a5[a], g.to_a5[b]))
        throw CheckError("conjugation action on Klein four-subgroups is not a homomorphism");

  const auto &a5 = chars::class_data(chars::GroupTag::A5);
  g.classes.assign(a5.class_count(), {});
  for (std::size_t i = 0; i < n; ++i)
    g.classes[a5.class_of_perm(g.to_a5[i])].push_back(i);

  // the same partition from the multiplication table alone
  for (const auto &cls : g.classes) {
    std::set<std::size_t> conj;
    for (std::size_t x = 0; x < n; ++x)
      conj.insert(g.table[g.table[x][cls.front()]][g.inverse[x]]);
    if (conj != std::set<std::size_t>(cls.begin(), cls.end()))
      throw CheckError("conjugacy classes disagree with the A5 isomorphism");
  }

  std::vector<CycloNum> tr;
  for (const auto &cls : g.classes) {
    tr.push_back(g.elements[cls.front()].trace());
    for (std::size_t i : cls)
      if (g.elements[i].trace() != tr.back())
        throw CheckError("trace is not constant on a conjugacy class");
  }
  g.trace_character = chars::ClassFunction(chars::GroupTag::A5, tr);
  const auto &table = chars::a5_table();
  for (const char *label : {"I", "I'"})
    if (g.trace_character == table[label])
      g.character_label = label;
  if (g.character_label.empty())
    throw CheckError("trace character " + g.trace_character.to_string() + " is neither I nor I'");
  return g;
}

IcosaGroup reconstruct_group()
{
  return analyze_group(search_line_symmetries().matrices);
}

std::vector<ProjPoint> orbit(const std::vector<MatrixF> &group, const ProjPoint &p)
{
  std::set<ProjPoint> pts;
  for (const auto &m : group)
    pts.insert(transform(m, p));
  return {pts.begin(), pts.end()};
}

ProjPoint eigen_point(const MatrixF &m, const CycloNum &eigenvalue)
{
  auto ker = linalg::kernel(m - MatrixF::identity(m.rows()) * eigenvalue);
  if (ker.size() != 1)
    throw CheckError("eigenspace for " + eigenvalue.to_string() + " has dimension " + std::to_string(ker.size()));
  return ProjPoint(ker.front());
}

IrregularOrbits irregular_orbits(const IcosaGroup &g)
{
  auto fixed_orbit = [&](int ord, std::size_t expected) {
    auto it = std::find(g.orders.begin(), g.orders.end(), ord);
    if (it == g.orders.end())
      throw CheckError("no element of order " + std::to_string(ord));
    const auto &m = g.elements[static_cast<std::size_t>(it - g.orders.begin())];
    auto o = orbit(g.elements, eigen_point(m, CycloNum(1)));
    if (o.size() != expected)
      throw CheckError("orbit of a fixed point of an order-" + std::to_string(ord) + " element has size " +
                       std::to_string(o.size()) + ", expected " + std::to_string(expected));
    return o;
  };
  IrregularOrbits out;
  out.six = fixed_orbit(5, 6);
  out.ten = fixed_orbit(3, 10);
  out.fifteen = fixed_orbit(2, 15);
  const CycloNum eta = CycloNum::zeta(5, 1);
  const MatrixF d = MatrixF::diagonal({eta, eta * eta * eta * eta, 1});
  out.twelve = orbit(g.elements, eigen_point(g.elements[g.index_of(d)], eta));
  if (out.twelve.size() != 12)
    throw CheckError("orbit of the eta-eigenvector has size " + std::to_string(out.twelve.size()) + ", expected 12");
  return out;
}

} // namespace winger::geometry
