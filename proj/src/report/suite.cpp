#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <type_traits>

#include "covers/binary.hpp"
#include "covers/covers.hpp"
#include "exactfield/errors.hpp"
#include "geometry/discriminant.hpp"
#include "geometry/group.hpp"
#include "invariants/molien.hpp"
#include "report/report.hpp"

namespace winger::report {

namespace {

using chars::ClassFunction;
using chars::GroupTag;
using field::CycloNum;
using field::Rational;
using geometry::IcosaGroup;
using geometry::MatrixF;
using geometry::Pencil;
using geometry::ProjPoint;
using hurwitz::Convention;
using hurwitz::GenTuple;
using inv::Poly3;

struct Outcome
{
  bool pass = false;
  std::string witness;
};

template <class T>
std::string join(const std::vector<T> &v, const std::string &sep = ",")
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += sep;
    if constexpr (std::is_same_v<T, std::string>)
      s += v[i];
    else
      s += std::to_string(v[i]);
  }
  return s;
}

// Lazily computed data shared by the claims of one run. Failures are cached
// and rethrown so every dependent claim fails with the same diagnostic.
template <class T>
class Lazy
{
public:
  template <class F>
  T &get(F &&make)
  {
    if (error_)
      std::rethrow_exception(error_);
    if (!value_) {
      try {
        value_ = std::make_unique<T>(make());
      } catch (const Error &) {
        error_ = std::current_exception();
        throw;
      }
    }
    return *value_;
  }

private:
  std::unique_ptr<T> value_;
  std::exception_ptr error_;
};

class Context
{
public:
  explicit Context(const Options &o)
  : opts(o), q(geometry::conic_q()), f(geometry::sextic_f())
  {
    if (opts.digits < 1 || opts.digits > 200)
      throw DomainError("digits must lie in 1..200");
    if (opts.corrupt_f) {
      const auto mons = inv::monomials(6);
      if (*opts.corrupt_f >= mons.size())
        throw DomainError("F slot out of range 0.." + std::to_string(mons.size() - 1));
      f += Poly3::monomial(mons[*opts.corrupt_f]);
    }
    if (opts.corrupt_matrix && (opts.corrupt_matrix->element >= 60 || opts.corrupt_matrix->entry >= 9))
      throw DomainError("matrix corruption must address element 0..59 and entry 0..8");
  }

  const Options &opts;
  Poly3 q, f;

  const geometry::LineSearch &search()
  {
    return search_.get([&] { return geometry::search_line_symmetries(geometry::six_lines(), static_cast<int>(opts.threads)); });
  }

  const std::vector<MatrixF> &matrices()
  {
    return matrices_.get([&] {
      auto m = search().matrices;
      if (opts.corrupt_matrix && opts.corrupt_matrix->element < m.size()) {
        auto &x = m[opts.corrupt_matrix->element];
        x(opts.corrupt_matrix->entry / 3, opts.corrupt_matrix->entry % 3) += CycloNum(1);
      }
      return m;
    });
  }

  const IcosaGroup &group()
  {
    return group_.get([&] { return geometry::analyze_group(matrices()); });
  }

  const geometry::IrregularOrbits &orbits()
  {
    return orbits_.get([&] { return geometry::irregular_orbits(group()); });
  }

  inv::Reynolds &reynolds()
  {
    return reynolds_.get([&] { return inv::Reynolds(group().elements); });
  }

  const inv::PowSeries &molien()
  {
    return molien_.get([&] { return inv::molien_series(group().elements, 30); });
  }

  const hurwitz::Enumeration &tuples(Convention c)
  {
    auto &slot = c == Convention::Rtl ? rtl_ : ltr_;
    return slot.get([&] { return hurwitz::enumerate_tuple_classes(c); });
  }

  Pencil pencil() const { return Pencil(q, f); }

private:
  Lazy<geometry::LineSearch> search_;
  Lazy<std::vector<MatrixF>> matrices_;
  Lazy<IcosaGroup> group_;
  Lazy<geometry::IrregularOrbits> orbits_;
  Lazy<inv::Reynolds> reynolds_;
  Lazy<inv::PowSeries> molien_;
  Lazy<hurwitz::Enumeration> rtl_, ltr_;
};

class Runner
{
public:
  Runner(Report &r, const Options &o)
  : report_(r), opts_(o)
  {
  }

  void run(const std::string &id, const std::string &description, const std::function<Outcome()> &check)
  {
    Claim c{id, description, Status::Fail, "", 0};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = check();
      c.status = o.pass && !o.witness.empty() ? Status::Pass : Status::Fail;
      c.witness = o.witness.empty() ? "no witness" : o.witness;
    } catch (const Error &e) {
      c.status = Status::Fail;
      c.witness = std::string("error: ") + e.what();
    }
    if (opts_.timing)
      c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report_.claims.push_back(std::move(c));
  }

  void skip(const std::string &id, const std::string &description, const std::string &why)
  {
    report_.claims.push_back({id, description, Status::Skipped, why, 0});
  }

  // Passes when every listed claim of this run passed.
  void aggregate(const std::string &id, const std::string &description, const std::vector<std::string> &parts)
  {
    run(id, description, [&] {
      std::vector<std::string> failed, witnesses;
      for (const auto &p : parts) {
        const Claim *c = report_.find(p);
        if (!c || c->status != Status::Pass)
          failed.push_back(p);
        else
          witnesses.push_back(p + ": " + c->witness);
      }
      if (failed.empty())
        return Outcome{true, join(witnesses, "; ")};
      return Outcome{false, "failing: " + join(failed, ", ")};
    });
  }

  void table(Table t) { report_.tables.push_back(std::move(t)); }

private:
  Report &report_;
  const Options &opts_;
};

// ---------------------------------------------------------------- characters

ClassFunction a5_values(std::vector<CycloNum> v)
{
  return ClassFunction(GroupTag::A5, std::move(v));
}

void characters_suite(Runner &run)
{
  const auto &t = chars::a5_table();
  Table tab{"A5 character table, classes (1) (12)(34) (123) (12345) (12354)", {}};
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    tab.lines.push_back(t.labels[i] + std::string(4 - t.labels[i].size(), ' ') + t.rows[i].to_string());
  tab.lines.push_back("S3I " + chars::sym_cube(t["I"]).to_string());
  run.table(std::move(tab));

  run.run("a5-character-table", "assembled A5 character table is orthonormal", [&] {
    const auto &d = chars::class_data(GroupTag::A5);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.rows.size(); ++j)
        if (chars::inner_product(t.rows[i], t.rows[j]) != CycloNum(i == j ? 1 : 0))
          return Outcome{false, "<" + t.labels[i] + "," + t.labels[j] + "> wrong"};
    // column orthogonality: sum_chi chi(g) conj(chi(h)) = |C(g)| delta
    for (std::size_t a = 0; a < d.class_count(); ++a)
      for (std::size_t b = 0; b < d.class_count(); ++b) {
        CycloNum s;
        for (const auto &chi : t.rows)
          s += chi[a] * chi[b].conj();
        CycloNum want = a == b ? CycloNum(Rational(60, static_cast<std::int64_t>(d.sizes[a]))) : CycloNum();
        if (s != want)
          return Outcome{false, "column orthogonality fails at classes " + std::to_string(a) + "," + std::to_string(b)};
      }
    std::vector<std::string> degs;
    for (const auto &chi : t.rows)
      degs.push_back(chi[0].to_string());
    return Outcome{true, "5 irreducibles of degrees " + join(degs) + ", row and column orthogonality exact"};
  });

  run.run("sym-cube", "symmetric cube of the 3-dimensional characters is (10,-2,1,0,0) = I + I' + V", [&] {
    const ClassFunction want = a5_values({10, -2, 1, 0, 0});
    ClassFunction s = chars::sym_cube(t["I"]), s2 = chars::sym_cube(t["I'"]);
    auto dec = chars::decompose(s);
    bool ok = s == want && s2 == want && dec == chars::Decomposition{{"I", 1}, {"I'", 1}, {"V", 1}};
    return Outcome{ok, "Sym3 I = " + s.to_string() + ", Sym3 I' = " + s2.to_string() + " = " + chars::to_string(dec)};
  });

  run.run("e-restriction", "six-dimensional S5 character restricts to I + I'", [&] {
    ClassFunction e = chars::restrict_to_a5(chars::s5_six_dimensional());
    auto dec = chars::decompose(e);
    bool ok = e == a5_values({6, -2, 0, 1, 1}) && dec == chars::Decomposition{{"I", 1}, {"I'", 1}};
    return Outcome{ok, "E|A5 = " + e.to_string() + " = " + chars::to_string(dec)};
  });

  run.aggregate("characters", "character table, symmetric cube and restriction checks",
                {"a5-character-table", "sym-cube", "e-restriction"});
}

// ---------------------------------------------------------------- invariants

void invariants_suite(Runner &run, Context &ctx)
{
  run.run("molien-closed-form", "Molien series to degree 30 equals (1+T^15)/((1-T^2)(1-T^6)(1-T^10))", [&] {
    const auto &m = ctx.molien();
    bool ok = m == inv::icosahedral_hilbert_series(30) && m[2] == Rational(1) && m[6] == Rational(2);
    std::vector<std::string> c;
    for (const auto &x : m.coeffs())
      c.push_back(x.to_string());
    return Outcome{ok, "coefficients " + join(c)};
  });

  run.run("reynolds-dimensions", "Reynolds images have the Molien dimensions for d <= 12 and d = 15", [&] {
    const auto &m = ctx.molien();
    auto &r = ctx.reynolds();
    std::vector<std::string> dims;
    bool ok = true;
    for (int d = 0; d <= 15; ++d) {
      if (d == 13 || d == 14)
        continue;
      std::size_t got = r.basis(d).size();
      ok = ok && Rational(static_cast<std::int64_t>(got)) == m[static_cast<std::size_t>(d)];
      dims.push_back(std::to_string(d) + ":" + std::to_string(got));
    }
    return Outcome{ok, join(dims, " ")};
  });

  run.run("invariant-basis-degree-6", "degree-2 invariants are spanned by Q and degree-6 invariants by Q^3 and F", [&] {
    auto &r = ctx.reynolds();
    auto b2 = r.basis(2), b6 = r.basis(6);
    std::vector<Poly3> two = b2;
    two.push_back(ctx.q);
    std::vector<Poly3> six = b6;
    six.push_back(ctx.q.pow(3));
    six.push_back(ctx.f);
    bool ok = b2.size() == 1 && inv::span_dimension(two, 2) == 1 && b6.size() == 2 && inv::span_dimension(six, 6) == 2 &&
              inv::span_dimension({ctx.q.pow(3), ctx.f}, 6) == 2;
    return Outcome{ok, "dim 1 at degree 2 containing Q; dim " + std::to_string(b6.size()) + " at degree 6, span with Q^3 and F has dim " +
                           std::to_string(inv::span_dimension(six, 6))};
  });

  run.run("versality-dimensions", "dim C[U]_6 = 28, 28 - 1 = 27 = 1 - 10 + 36, invariant sextics form a plane", [&] {
    std::size_t all = inv::monomial_count(6), inv6 = ctx.reynolds().basis(6).size();
    bool ok = all == 28 && all - 1 == 1 - 10 + 36 && inv6 == 2 && ctx.molien()[6] == Rational(2);
    return Outcome{ok, "28 -> " + std::to_string(all) + ", 27 -> " + std::to_string(all - 1) + ", 2 -> " + std::to_string(inv6)};
  });

  run.aggregate("molien", "Molien series, Reynolds dimensions and sextic dimensions",
                {"molien-closed-form", "reynolds-dimensions", "invariant-basis-degree-6", "versality-dimensions"});
}

// ---------------------------------------------------------------- pencil

Outcome invariance_check(const std::vector<MatrixF> &mats, const Poly3 &q, const Poly3 &f)
{
  const MatrixF a = geometry::gram_matrix();
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (mats[i].transpose() * a * mats[i] != a || linalg::det(mats[i]) != CycloNum(1))
      return {false, "element " + std::to_string(i) + " breaks M^T A M = A or det M = 1"};
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (inv::act_on_poly(mats[i], q) != q)
      return {false, "element " + std::to_string(i) + " moves Q"};
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (inv::act_on_poly(mats[i], f) != f)
      return {false, "element " + std::to_string(i) + " moves F"};
  return {mats.size() == 60, std::to_string(mats.size()) + " elements fix Q and F, preserve A and have det 1"};
}

Outcome six_lines_check(const Poly3 &f)
{
  auto lines = geometry::six_lines();
  Poly3 prod(CycloNum(1));
  for (const auto &l : lines)
    prod = prod * (l.poly() * l.scale);
  int concurrent = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c) {
        MatrixF m{{lines[a].coeffs[0], lines[a].coeffs[1], lines[a].coeffs[2]},
                  {lines[b].coeffs[0], lines[b].coeffs[1], lines[b].coeffs[2]},
                  {lines[c].coeffs[0], lines[c].coeffs[1], lines[c].coeffs[2]}};
        concurrent += linalg::det(m).is_zero();
      }
  bool ok = lines.size() == 6 && concurrent == 0 && prod == f;
  return {ok, "6 lines, " + std::to_string(concurrent) + " concurrent triples of 20, product " +
                  (prod == f ? "equals F" : "differs from F")};
}

Outcome lambda_check(const Pencil &pencil, const std::vector<ProjPoint> &orbit, const geometry::Lambda &expected,
                     std::size_t size)
{
  std::size_t hits = 0, nodes = 0;
  for (const auto &p : orbit) {
    hits += pencil.singular_lambda(p).is(expected);
    nodes += pencil.node_check(expected, p);
  }
  std::string first = orbit.empty() ? "none" : pencil.singular_lambda(orbit.front()).to_string();
  bool ok = orbit.size() == size && hits == size && nodes == size;
  return {ok, "lambda = " + first + " on " + std::to_string(hits) + "/" + std::to_string(orbit.size()) +
                  " points, ordinary nodes at " + std::to_string(nodes)};
}

std::size_t cyclic_subgroups_of_order(int n)
{
  std::set<std::vector<perm::Perm>> subgroups;
  for (const auto &g : hurwitz::elements_of_order(n)) {
    auto h = perm::closure({g}).elements();
    std::sort(h.begin(), h.end(), [](const perm::Perm &a, const perm::Perm &b) { return a.images() < b.images(); });
    subgroups.insert(h);
  }
  return subgroups.size();
}

// True when corrupting the model is caught by some pencil check.
bool corruption_detected(const std::vector<MatrixF> &mats, const Poly3 &q, const Poly3 &f)
{
  try {
    if (!invariance_check(mats, q, f).pass || !six_lines_check(f).pass)
      return true;
    geometry::analyze_group(mats);
  } catch (const Error &) {
    return true;
  }
  return false;
}

void pencil_suite(Runner &run, Context &ctx)
{
  run.run("group-reconstruction", "line-permutation search yields the 60-element icosahedral group", [&] {
    const auto &s = ctx.search();
    const auto &g = ctx.group();
    auto sizes = g.class_sizes();
    bool ok = s.permutations_tried == 720 && s.matrices.size() == 60 &&
              sizes == std::vector<std::size_t>{1, 15, 20, 12, 12} && (g.character_label == "I" || g.character_label == "I'");
    return Outcome{ok, std::to_string(s.permutations_tried) + " permutations, " + std::to_string(s.matrices.size()) +
                           " survivors, class sizes " + join(sizes) + ", trace character " + g.character_label + " " +
                           g.trace_character.to_string()};
  });

  run.run("invariance", "Q and F are fixed by all 60 elements, which preserve the Gram matrix and have det 1",
          [&] { return invariance_check(ctx.matrices(), ctx.q, ctx.f); });

  run.run("six-lines", "the six lines are in general position and their product is F", [&] { return six_lines_check(ctx.f); });

  const Pencil pencil = ctx.pencil();
  run.run("lambda-six-orbit", "the 6-orbit consists of nodes of the member lambda = -1",
          [&] { return lambda_check(pencil, ctx.orbits().six, CycloNum(-1), 6); });
  run.run("lambda-ten-orbit", "the 10-orbit consists of nodes of the member lambda = 27/5",
          [&] { return lambda_check(pencil, ctx.orbits().ten, CycloNum(Rational(27, 5)), 10); });
  run.run("lambda-fifteen-orbit", "the 15-orbit consists of nodes of the member lambda = infinity",
          [&] { return lambda_check(pencil, ctx.orbits().fifteen, std::nullopt, 15); });

  run.run("base-locus", "the 12-orbit on K lies on every member, two points on each line", [&] {
    const auto &pts = ctx.orbits().twelve;
    auto lines = geometry::six_lines();
    std::vector<int> per_line(6, 0);
    bool ok = pts.size() == 12;
    std::size_t on_both = 0, on_members = 0;
    for (const auto &p : pts) {
      bool base = p.evaluate(ctx.q).is_zero() && p.evaluate(ctx.f).is_zero();
      on_both += base;
      ok = ok && base && pencil.singular_lambda(p).is(CycloNum(0));
      int hits = 0;
      for (std::size_t l = 0; l < 6; ++l)
        if (lines[l].evaluate(p.vec()).is_zero()) {
          ++hits;
          ++per_line[l];
        }
      ok = ok && hits == 1;
    }
    for (const auto &p : pts) {
      bool all = true;
      for (const auto &l : {CycloNum(Rational(-7, 3)), CycloNum(Rational(11, 2))})
        all = all && p.evaluate(pencil.member(l)).is_zero();
      on_members += all;
    }
    ok = ok && on_members == pts.size() && per_line == std::vector<int>(6, 2);
    return Outcome{ok, std::to_string(on_both) + "/" + std::to_string(pts.size()) + " points with Q = F = 0, " +
                           std::to_string(on_members) + " on sampled members, per line " + join(per_line)};
  });

  run.aggregate("singular-fibers", "singular members at lambda = 0, -1, 27/5, infinity on the irregular orbits",
                {"lambda-six-orbit", "lambda-ten-orbit", "lambda-fifteen-orbit", "base-locus"});

  Table members{"Singular members of Q^3 + lambda F", {}};
  members.lines = {"lambda = 0         3K, singular along the conic", "lambda = -1        6 nodes on the 6-orbit",
                   "lambda = 27/5      10 nodes on the 10-orbit", "lambda = infinity  six lines, 15 nodes on the 15-orbit"};
  run.table(std::move(members));

  run.run("fault-injection", "corrupting any coefficient of F or any matrix entry is detected", [&] {
    const auto &clean = ctx.search().matrices;
    const Poly3 q = geometry::conic_q(), f = geometry::sextic_f();
    if (corruption_detected(clean, q, f))
      return Outcome{false, "the uncorrupted model is rejected"};
    const auto mons = inv::monomials(6);
    std::size_t f_hits = 0, m_hits = 0, m_total = 0;
    std::vector<std::string> missed;
    for (std::size_t k = 0; k < mons.size(); ++k) {
      if (corruption_detected(clean, q, f + Poly3::monomial(mons[k])))
        ++f_hits;
      else
        missed.push_back("F[" + std::to_string(k) + "]");
    }
    for (std::size_t e = 0; e < clean.size(); ++e)
      for (std::size_t entry = 0; entry < 9; ++entry) {
        auto mats = clean;
        mats[e](entry / 3, entry % 3) += CycloNum(1);
        ++m_total;
        if (corruption_detected(mats, q, f))
          ++m_hits;
        else
          missed.push_back("M" + std::to_string(e) + ":" + std::to_string(entry));
      }
    std::string w = "F slots " + std::to_string(f_hits) + "/" + std::to_string(mons.size()) + ", matrix entries " +
                    std::to_string(m_hits) + "/" + std::to_string(m_total) + " detected";
    if (!missed.empty())
      w += "; missed " + join(missed, " ");
    return Outcome{missed.empty() && m_total == 540, w};
  });

  const std::string disc = "discriminant of the pencil vanishes only at lambda = 0, -1, 27/5 and infinity";
  if (!ctx.opts.deep) {
    run.skip("discriminant", disc, "needs --deep");
    return;
  }
  run.run("discriminant", disc, [&] {
    auto r = geometry::pencil_discriminant(pencil, {Rational(0), Rational(-1), Rational(27, 5)}, ctx.opts.threads);
    bool ok = r.roots_exhaust && r.roots.size() == 3 && r.infinity_is_root();
    return Outcome{ok, r.to_string() + ", " + std::to_string(r.evaluation_points) + " exact determinants"};
  });
}

// ---------------------------------------------------------------- orbits

void orbits_suite(Runner &run, Context &ctx)
{
  run.run("irregular-orbits", "fixed points give disjoint orbits of sizes 6, 10, 15 off K and 12 on K", [&] {
    const auto &o = ctx.orbits();
    std::set<ProjPoint> all;
    bool ok = true;
    for (const auto *orb : {&o.six, &o.ten, &o.fifteen, &o.twelve})
      all.insert(orb->begin(), orb->end());
    for (const auto *orb : {&o.six, &o.ten, &o.fifteen})
      for (const auto &p : *orb)
        ok = ok && !p.evaluate(ctx.q).is_zero();
    for (const auto &p : o.twelve)
      ok = ok && p.evaluate(ctx.q).is_zero();
    ok = ok && o.six.size() == 6 && o.ten.size() == 10 && o.fifteen.size() == 15 && o.twelve.size() == 12 &&
         all.size() == 43 && std::count(o.six.begin(), o.six.end(), ProjPoint(0, 0, 1)) == 1 &&
         std::count(o.twelve.begin(), o.twelve.end(), ProjPoint(1, 0, 0)) == 1;
    return Outcome{ok, "sizes " + std::to_string(o.six.size()) + "," + std::to_string(o.ten.size()) + "," +
                           std::to_string(o.fifteen.size()) + "," + std::to_string(o.twelve.size()) + "; " +
                           std::to_string(all.size()) + " distinct points; [0 : 0 : 1] in the 6-orbit, [1 : 0 : 0] in the 12-orbit"};
  });

  run.run("k-orbit-sizes", "irregular orbits on K have sizes 12, 20, 30", [&] {
    std::vector<std::size_t> sizes;
    bool ok = true;
    for (int n : {5, 3, 2}) {
      // each cyclic subgroup fixes two points of K
      std::size_t s = 2 * cyclic_subgroups_of_order(n);
      ok = ok && s == static_cast<std::size_t>(60 / n);
      sizes.push_back(s);
    }
    ok = ok && ctx.orbits().twelve.size() == sizes[0];
    return Outcome{ok, "stabilizer orders 5,3,2 give orbit sizes " + join(sizes) + "; exact 12-orbit has " +
                           std::to_string(ctx.orbits().twelve.size()) + " points"};
  });

  Table tab{"Irregular orbits (exact points, real parts of coordinates)", {}};
  try {
    const auto &o = ctx.orbits();
    const std::vector<std::pair<std::string, const std::vector<ProjPoint> *>> named{
        {"6", &o.six}, {"10", &o.ten}, {"15", &o.fifteen}, {"12", &o.twelve}};
    for (const auto &[name, orb] : named)
      for (const auto &p : *orb) {
        std::string line = name + std::string(3 - name.size(), ' ') + p.to_string() + "  ~ (";
        for (std::size_t i = 0; i < 3; ++i) {
          auto z = field::cyclo_embed(p[i], ctx.opts.digits);
          line += (i ? ", " : "") + z.real + (z.imag[0] == '-' ? " - " + z.imag.substr(1) : " + " + z.imag) + "i";
        }
        tab.lines.push_back(line + ")");
      }
  } catch (const Error &e) {
    tab.lines.push_back(std::string("unavailable: ") + e.what());
  }
  run.table(std::move(tab));
}

// ---------------------------------------------------------------- tuples

std::size_t class_index(const hurwitz::Enumeration &e, Convention c, const GenTuple &t)
{
  GenTuple k = hurwitz::canonical(c, t);
  for (std::size_t i = 0; i < e.classes.size(); ++i)
    if (e.classes[i].representative == k)
      return i;
  return e.classes.size();
}

Outcome reference_tuple_check(Context &ctx, Convention c)
{
  const auto &e = ctx.tuples(c);
  std::set<std::size_t> hit;
  int literal = 0, inverted = 0;
  for (const auto &[row, r] : hurwitz::reference_tuples()) {
    GenTuple t = row;
    if (hurwitz::is_generating_tuple(c, row))
      ++literal;
    else if (hurwitz::is_generating_tuple(c, hurwitz::inverted(row))) {
      t = hurwitz::inverted(row);
      ++inverted;
    } else
      return {false, "row " + hurwitz::to_string(row) + " is not a generating tuple"};
    std::size_t k = class_index(e, c, t);
    if (k == e.classes.size() || e.classes[k].r != r || e.classes[k].g1_class != 3 ||
        hurwitz::mul(c, t[0], t[1]).order() != r)
      return {false, "row " + hurwitz::to_string(row) + " does not match a class with r = " + std::to_string(r)};
    hit.insert(k);
  }
  return {hit.size() == 10, std::to_string(hit.size()) + "/10 rows matched in " + hurwitz::convention_name(c) + " (" +
                                std::to_string(literal) + " literally, " + std::to_string(inverted) + " after elementwise inversion)"};
}

void tuples_suite(Runner &run, Context &ctx)
{
  const Convention c = ctx.opts.convention;
  const bool both = c != Convention::Rtl;
  const auto &a5cls = chars::class_data(GroupTag::A5);

  run.run("order-sets", "A5 has 15 involutions, 20 elements of order 3 and 24 of order 5", [&] {
    auto s = hurwitz::order_sets();
    bool ok = s.order2 == 15 && s.order3 == 20 && s.order5 == 24 && s.order5 * s.order2 == 360;
    return Outcome{ok, "|A5(2)| = " + std::to_string(s.order2) + ", |A5(3)| = " + std::to_string(s.order3) +
                           ", |A5(5)| = " + std::to_string(s.order5) + ", |A5(5) x A5(2)| = " + std::to_string(s.order5 * s.order2)};
  });

  run.run("pair-orbits", "conjugation on A5(5) x A5(2) is free with 6 orbits matching the listed pairs", [&] {
    auto orbits = hurwitz::pair_orbits(c);
    std::vector<int> rs;
    bool ok = orbits.size() == 6;
    for (const auto &o : orbits) {
      ok = ok && o.size == 60 && o.free;
      rs.push_back(o.r);
    }
    std::set<std::size_t> hit;
    for (const auto &[pair, r] : hurwitz::pair_representatives()) {
      auto p = pair;
      if (c == Convention::Ltr)
        p = {pair.first.inverse(), pair.second.inverse()};
      std::size_t k = hurwitz::pair_orbit_of(orbits, c, p);
      ok = ok && orbits[k].r == r;
      hit.insert(k);
    }
    std::sort(rs.begin(), rs.end());
    ok = ok && hit.size() == 6 && rs == std::vector<int>{2, 2, 3, 3, 5, 5};
    return Outcome{ok, std::to_string(orbits.size()) + " free orbits of size 60, ord(g1g2) " + join(rs) + ", " +
                           std::to_string(hit.size()) + " listed pairs in distinct orbits"};
  });

  run.run("involution-factorizations", "h of order r has r factorizations into involutions", [&] {
    std::map<int, std::size_t> seen;
    bool ok = true;
    for (const auto &h : hurwitz::a5().elements()) {
      int r = h.order();
      if (r == 1)
        continue;
      auto f = hurwitz::involution_factorizations(c, h);
      ok = ok && f.size() == static_cast<std::size_t>(r);
      if (r == 2) {
        for (const auto &[h1, h2] : f)
          ok = ok && hurwitz::mul(c, h1, h2) == hurwitz::mul(c, h2, h1);
      } else {
        std::set<std::pair<perm::Perm, perm::Perm>> orb;
        for (int k = 0; k < r; ++k) {
          auto x = perm::power(h, k);
          orb.insert({hurwitz::conj(c, f[0].first, x), hurwitz::conj(c, f[0].second, x)});
        }
        ok = ok && orb.size() == static_cast<std::size_t>(r) &&
             orb == std::set<std::pair<perm::Perm, perm::Perm>>(f.begin(), f.end());
      }
      seen[r] = f.size();
    }
    return Outcome{ok, "r=2: " + std::to_string(seen[2]) + " commuting, r=3: " + std::to_string(seen[3]) +
                           " in one free orbit, r=5: " + std::to_string(seen[5]) + " in one free orbit"};
  });

  run.run("tuple-classes-20", "A5(5,2,2,2) has exactly 20 generating tuple classes", [&] {
    const auto &e = ctx.tuples(c);
    std::string w = std::to_string(e.classes.size()) + " classes from " + std::to_string(e.raw_tuples) + " generating tuples";
    bool ok = e.classes.size() == 20 && e.raw_tuples == 1200;
    if (both) {
      const auto &r = ctx.tuples(Convention::Rtl);
      ok = ok && r.classes.size() == 20;
      w += "; rtl: " + std::to_string(r.classes.size());
    }
    return Outcome{ok, w};
  });

  run.run("tuple-split-r", "classes split 4/6/10 by the order of g1 g2", [&] {
    std::map<int, int> by;
    for (const auto &tc : ctx.tuples(c).classes)
      ++by[tc.r];
    bool ok = by == std::map<int, int>{{2, 4}, {3, 6}, {5, 10}};
    return Outcome{ok, "r=2: " + std::to_string(by[2]) + ", r=3: " + std::to_string(by[3]) + ", r=5: " + std::to_string(by[5])};
  });

  run.run("tuple-split-g1", "classes split 10/10 by the class of g1", [&] {
    std::map<std::size_t, int> by;
    for (const auto &tc : ctx.tuples(c).classes)
      ++by[tc.g1_class];
    bool ok = by == std::map<std::size_t, int>{{3, 10}, {4, 10}};
    return Outcome{ok, "g1 ~ (12345): " + std::to_string(by[3]) + ", g1 ~ (12354): " + std::to_string(by[4])};
  });

  run.run("reference-tuples", "the ten reference tuples with g1 = (12345) are ten distinct classes", [&] {
    Outcome o = reference_tuple_check(ctx, c);
    if (both) {
      Outcome r = reference_tuple_check(ctx, Convention::Rtl);
      o.pass = o.pass && r.pass;
      o.witness += "; " + r.witness;
    }
    return o;
  });

  Table classes_tab{std::string("Tuple classes with g1 ~ (12345), composition ") + hurwitz::convention_name(c), {}};
  try {
    for (const auto &tc : ctx.tuples(c).classes)
      if (tc.g1_class == 3)
        classes_tab.lines.push_back(hurwitz::to_string(tc.representative) + "  r=" + std::to_string(tc.r));
  } catch (const Error &e) {
    classes_tab.lines.push_back(std::string("unavailable: ") + e.what());
  }
  run.table(std::move(classes_tab));

  run.aggregate("tuples", "tuple classes, splits, reference tuples, pair orbits and factorizations",
                {"order-sets", "pair-orbits", "involution-factorizations", "tuple-classes-20", "tuple-split-r",
                 "tuple-split-g1", "reference-tuples"});

  auto orbit_check = [&](hurwitz::GeneratorSet gens) {
    const auto &e = ctx.tuples(c);
    auto orbits = hurwitz::braid_orbits(c, e.classes, gens);
    bool ok = orbits.size() == 2;
    std::vector<std::string> parts;
    for (const auto &o : orbits) {
      std::set<std::size_t> g1;
      std::set<int> rs;
      for (std::size_t i : o) {
        g1.insert(e.classes[i].g1_class);
        rs.insert(e.classes[i].r);
      }
      ok = ok && o.size() == 10 && g1.size() == 1 && rs == std::set<int>{2, 3, 5};
      parts.push_back(std::to_string(o.size()) + " classes with g1 ~ " +
                      a5cls.representatives[*g1.begin()].to_compact_string() + " and r in {" +
                      join(std::vector<int>(rs.begin(), rs.end())) + "}");
    }
    return Outcome{ok, std::to_string(orbits.size()) + " orbits: " + join(parts, "; ")};
  };
  run.run("braid-orbits-pure", "pure moves sigma_i^2 have two orbits of size 10 split by the class of g1",
          [&] { return orbit_check(hurwitz::GeneratorSet::Pure); });
  run.run("braid-orbits-weighted", "moves sigma_2, sigma_3, sigma_1^2 have two orbits of size 10",
          [&] { return orbit_check(hurwitz::GeneratorSet::Weighted); });

  run.run("move-identities", "the transport and type-changing moves are braid words up to global conjugation", [&] {
    const auto &e = ctx.tuples(c);
    auto sq = [&](int k, const GenTuple &t, bool inverse) {
      return hurwitz::hurwitz_move(c, k, hurwitz::hurwitz_move(c, k, t, inverse), inverse);
    };
    bool ok = true;
    for (const auto &tc : e.classes) {
      const GenTuple &t = tc.representative;
      ok = ok && hurwitz::transport_move(c, t) == hurwitz::conj(c, sq(1, t, true), hurwitz::mul(c, t[0], t[1]));
      ok = ok && hurwitz::type_changing_move(c, t) == hurwitz::conj(c, sq(2, t, false), t[1].inverse());
    }
    int examples = 0;
    for (const auto &ex : hurwitz::type_changing_examples()) {
      GenTuple in = c == Convention::Rtl ? ex.input : hurwitz::inverted(ex.input);
      GenTuple out = hurwitz::type_changing_move(c, in);
      auto fix = [&](const perm::Perm &p) { return c == Convention::Rtl ? p : p.inverse(); };
      bool good = out[0] == fix(ex.expected_first) && out[1] == fix(ex.expected_second) &&
                  hurwitz::mul(c, out[0], out[1]).order() == ex.expected_product.order() &&
                  ex.expected_product.order() != hurwitz::mul(c, in[0], in[1]).order();
      examples += good;
    }
    ok = ok && examples == 2;
    return Outcome{ok, "transport = sigma_1^-2 then conjugation by a1a2; type change = sigma_2^2 then conjugation by a2^-1; on " +
                           std::to_string(e.classes.size()) + " classes; " + std::to_string(examples) + "/2 worked examples change r"};
  });

  run.aggregate("braid-orbits", "pure and weighted braid orbits", {"braid-orbits-pure", "braid-orbits-weighted"});
}

// ---------------------------------------------------------------- covers

void covers_suite(Runner &run)
{
  run.run("alpha-values", "alpha = 60 - 60/n is 0, 30, 40, 48 for n = 1, 2, 3, 5", [&] {
    std::vector<int> a;
    for (int n : {1, 2, 3, 5})
      a.push_back(covers::alpha_value(n));
    bool rejects = false;
    try {
      covers::alpha_value(4);
    } catch (const DomainError &) {
      rejects = true;
    }
    return Outcome{a == std::vector<int>{0, 30, 40, 48} && rejects, "alpha(1,2,3,5) = " + join(a) + ", order 4 rejected"};
  });

  run.run("signature-solutions", "138 = 120 g + sum alpha has the unique solution (0;5,2,2,2)", [&] {
    auto s = covers::signature_solutions();
    std::vector<std::string> names;
    for (const auto &x : s)
      names.push_back(x.to_string());
    bool ok = s.size() == 1 && s[0] == covers::OrbSignature{0, {5, 2, 2, 2}};
    return Outcome{ok, "solutions {" + join(names) + "}"};
  });

  run.run("cover-genera", "Riemann-Hurwitz genera 10, 0 and 4 for the covers in play", [&] {
    int a = covers::regular_cover_genus(60, {5, 2, 2, 2}, 0), b = covers::regular_cover_genus(10, {5, 2, 2}, 0),
        d = covers::regular_cover_genus(60, {5, 2, 5}, 0);
    bool ok = a == 10 && b == 0 && d == 4;
    return Outcome{ok, "(60;5,2,2,2) -> " + std::to_string(a) + ", (10;5,2,2) -> " + std::to_string(b) +
                           ", (60;5,2,5) -> " + std::to_string(d)};
  });

  run.run("triple-cover", "the cyclic triple cover of K branched in the 12-orbit has genus 10", [&] {
    std::size_t points = 2 * cyclic_subgroups_of_order(5);
    std::vector<int> orders(points, 3);
    int ramification = 0;
    for (int e : orders)
      ramification += e - 1;
    int g = covers::regular_cover_genus(3, orders, 0);
    bool ok = points == 12 && ramification == 24 && g == 10 && g == covers::regular_cover_genus(60, {5, 2, 2, 2}, 0);
    return Outcome{ok, std::to_string(points) + " branch points, sum (e_P - 1) = " + std::to_string(ramification) +
                           ", genus " + std::to_string(g)};
  });

  run.aggregate("riemann-hurwitz", "orbifold signature and cover genera",
                {"alpha-values", "signature-solutions", "cover-genera", "triple-cover"});
}

void degenerations_suite(Runner &run, Context &ctx)
{
  const Convention c = ctx.opts.convention;
  run.run("degenerations", "coalescing g3, g4 gives three degeneration types, all of arithmetic genus 10", [&] {
    const auto &e = ctx.tuples(c);
    std::map<int, std::pair<covers::DegenerationReport, int>> types;
    bool ok = e.classes.size() == 20;
    for (const auto &tc : e.classes) {
      auto r = covers::degeneration_report(c, tc.representative);
      ok = ok && r.arithmetic_genus == 10 && r.e * 2 * r.n == 60;
      auto [it, fresh] = types.try_emplace(r.n, r, 0);
      ok = ok && it->second.first == r;
      ++it->second.second;
    }
    const std::map<int, std::string> member{{2, "six lines"}, {3, "10-nodal member"}, {5, "6-nodal member"}};
    const std::map<int, std::tuple<int, int, int>> want{{2, {15, 6, 0}}, {3, {10, 1, 0}}, {5, {6, 1, 4}}};
    std::vector<std::string> parts;
    ok = ok && types.size() == 3;
    for (const auto &[n, rc] : types) {
      const auto &r = rc.first;
      ok = ok && want.count(n) && want.at(n) == std::make_tuple(r.e, r.v, r.component_genus);
      parts.push_back(r.to_string() + " (" + std::to_string(rc.second) + " classes, node count as the " +
                      (member.count(n) ? member.at(n) : "?") + ")");
    }
    return Outcome{ok, join(parts, "; ")};
  });
}

void homology_suite(Runner &run)
{
  run.run("homology-lattice", "signed permutation character on 20 roots is (10,-2,1,0,0) and twice it is 2V + 2I + 2I'", [&] {
    auto h = covers::homology_character_check();
    bool ok = h.passed && h.lattice_character == a5_values({10, -2, 1, 0, 0});
    return Outcome{ok, "chi_L = " + h.lattice_character.to_string() + " = " + chars::to_string(h.decomposition) +
                           ", 2 chi_L = " + chars::to_string(h.doubled) + (h.equals_sym_cube ? ", equals Sym3 I" : "")};
  });
}

void binary_suite(Runner &run)
{
  run.run("binary-icosahedral", "120 icosian units form a perfect group with center of order 2", [&] {
    auto r = covers::binary_icosahedral_checks();
    return Outcome{r.passed, r.to_string()};
  });
}

} // namespace

Report run_suite(Suite suite, const Options &opts)
{
  Report report;
  report.version = version();
  report.convention = hurwitz::convention_name(opts.convention);
  Context ctx(opts);
  Runner run(report, opts);
  auto want = [&](Suite s) { return suite == s || suite == Suite::All; };
  if (want(Suite::Characters))
    characters_suite(run);
  if (want(Suite::Invariants))
    invariants_suite(run, ctx);
  if (want(Suite::Pencil))
    pencil_suite(run, ctx);
  if (want(Suite::Orbits))
    orbits_suite(run, ctx);
  if (want(Suite::Tuples))
    tuples_suite(run, ctx);
  if (want(Suite::Covers))
    covers_suite(run);
  if (want(Suite::Degenerations))
    degenerations_suite(run, ctx);
  if (want(Suite::Homology))
    homology_suite(run);
  if (want(Suite::Binary))
    binary_suite(run);
  return report;
}

} // namespace winger::report
