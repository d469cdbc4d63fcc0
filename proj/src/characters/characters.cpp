#include "characters/characters.hpp"

#include <algorithm>

#include "exactfield/errors.hpp"

namespace winger::chars {

using field::Rational;

namespace {

ClassData build(GroupTag tag)
{
  ClassData d{tag, {}, {}, {}, {}};
  std::vector<const char *> reps;
  if (tag == GroupTag::A5) {
    d.group = perm::alternating_group(5);
    reps = {"()", "(12)(34)", "(123)", "(12345)", "(12354)"};
  } else {
    d.group = perm::symmetric_group(5);
    reps = {"()", "(12)", "(12)(34)", "(123)", "(123)(45)", "(1234)", "(12345)"};
  }
  auto classes = perm::conjugacy_classes(d.group);
  if (classes.size() != reps.size())
    throw InternalError("unexpected number of conjugacy classes");
  d.class_of.assign(d.group.order(), reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Perm r = Perm::parse(reps[c], 5);
    std::size_t idx = *d.group.index_of(r);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto &cls) {
      return std::find(cls.begin(), cls.end(), idx) != cls.end();
    });
    for (std::size_t i : *it)
      d.class_of[i] = c;
    d.representatives.push_back(r);
    d.sizes.push_back(it->size());
  }
  if (std::count(d.class_of.begin(), d.class_of.end(), reps.size()))
    throw InternalError("class representatives do not cover the group");
  return d;
}

const CycloNum &checked_integer(const CycloNum &x)
{
  if (!x.is_rational() || !x.to_rational().is_integer())
    throw DomainError("class function does not have integral inner products: " + x.to_string());
  return x;
}

} // namespace

const char *tag_name(GroupTag tag)
{
  return tag == GroupTag::A5 ? "A5" : "S5";
}

std::size_t ClassData::class_of_perm(const Perm &p) const
{
  auto idx = group.index_of(p);
  if (!idx)
    throw DomainError("permutation " + p.to_string() + " is not in " + tag_name(tag));
  return class_of[*idx];
}

const ClassData &class_data(GroupTag tag)
{
  static const ClassData a5 = build(GroupTag::A5);
  static const ClassData s5 = build(GroupTag::S5);
  return tag == GroupTag::A5 ? a5 : s5;
}

std::vector<std::size_t> power_map(GroupTag tag, int k)
{
  const auto &d = class_data(tag);
  std::vector<std::size_t> out;
  for (const auto &r : d.representatives)
    out.push_back(d.class_of_perm(perm::power(r, k)));
  return out;
}

PowerMaps power_maps(GroupTag tag)
{
  return {power_map(tag, 2), power_map(tag, 3)};
}

ClassFunction::ClassFunction(GroupTag tag, std::vector<CycloNum> values)
: tag_(tag), values_(std::move(values))
{
  if (values_.size() != class_data(tag).class_count())
    throw MismatchError("class function length does not match the class count of " + std::string(tag_name(tag)));
}

const CycloNum &ClassFunction::at(const Perm &g) const
{
  return values_[class_data(tag_).class_of_perm(g)];
}

ClassFunction ClassFunction::conj() const
{
  std::vector<CycloNum> v;
  for (const auto &x : values_)
    v.push_back(x.conj());
  return {tag_, std::move(v)};
}

std::string ClassFunction::to_string() const
{
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i)
    s += (i ? ", " : "") + values_[i].to_string();
  return s + ")";
}

ClassFunction &ClassFunction::operator+=(const ClassFunction &o)
{
  if (tag_ != o.tag_)
    throw MismatchError("adding class functions of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += o.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator-=(const ClassFunction &o)
{
  if (tag_ != o.tag_)
    throw MismatchError("subtracting class functions of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= o.values_[i];
  return *this;
}

ClassFunction operator*(const CycloNum &s, ClassFunction a)
{
  for (auto &x : a.values_)
    x *= s;
  return a;
}

ClassFunction trivial_character(GroupTag tag)
{
  return {tag, std::vector<CycloNum>(class_data(tag).class_count(), CycloNum(1))};
}

ClassFunction permutation_character(GroupTag tag)
{
  std::vector<CycloNum> v;
  for (const auto &r : class_data(tag).representatives)
    v.emplace_back(r.fixed_points());
  return {tag, std::move(v)};
}

ClassFunction coset_character(GroupTag tag, const GroupTable &h)
{
  const auto &d = class_data(tag);
  auto act = perm::coset_action(d.group, h);
  std::vector<CycloNum> v;
  for (const auto &r : d.representatives)
    v.emplace_back(act.images[*d.group.index_of(r)].fixed_points());
  return {tag, std::move(v)};
}

const ClassFunction &CharacterTable::operator[](const std::string &label) const
{
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw DomainError("no irreducible labelled " + label);
  return rows[static_cast<std::size_t>(it - labels.begin())];
}

namespace {

CharacterTable build_a5_table()
{
  using perm::closure;
  const CycloNum phi = field::golden_ratio();
  const CycloNum psi = CycloNum(1) - phi;
  CharacterTable t;
  t.labels = {"1", "I", "I'", "V", "W"};
  t.rows.push_back(trivial_character(GroupTag::A5));
  t.rows.emplace_back(GroupTag::A5, std::vector<CycloNum>{3, -1, 0, phi, psi});
  t.rows.emplace_back(GroupTag::A5, std::vector<CycloNum>{3, -1, 0, psi, phi});
  t.rows.push_back(permutation_character(GroupTag::A5) - t.rows[0]);
  auto d10 = closure({Perm::parse("(12345)", 5), Perm::parse("(25)(34)", 5)});
  if (d10.order() != 10)
    throw InternalError("dihedral subgroup has wrong order");
  t.rows.push_back(coset_character(GroupTag::A5, d10) - t.rows[0]);

  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.rows.size(); ++j)
      if (inner_product(t.rows[i], t.rows[j]) != CycloNum(i == j ? 1 : 0))
        throw InternalError("A5 character table rows " + t.labels[i] + ", " + t.labels[j] + " are not orthonormal");
  return t;
}

} // namespace

const CharacterTable &a5_table()
{
  static const CharacterTable t = build_a5_table();
  return t;
}

CycloNum inner_product(const ClassFunction &chi, const ClassFunction &psi)
{
  if (chi.tag() != psi.tag())
    throw MismatchError("inner product of class functions of different groups");
  const auto &d = class_data(chi.tag());
  CycloNum sum;
  for (std::size_t c = 0; c < d.class_count(); ++c)
    sum += CycloNum(static_cast<std::int64_t>(d.sizes[c])) * chi[c] * psi[c].conj();
  return sum * CycloNum(Rational(1, static_cast<std::int64_t>(d.group.order())));
}

ClassFunction sym_cube(const ClassFunction &chi, const PowerMaps &maps)
{
  if (maps.square.size() != chi.size() || maps.cube.size() != chi.size())
    throw MismatchError("power maps do not match the class function");
  std::vector<CycloNum> v;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const CycloNum &x = chi[c];
    v.push_back((x * x * x + CycloNum(3) * chi[maps.square[c]] * x + CycloNum(2) * chi[maps.cube[c]]) *
                CycloNum(Rational(1, 6)));
  }
  return {chi.tag(), std::move(v)};
}

ClassFunction sym_cube(const ClassFunction &chi)
{
  return sym_cube(chi, power_maps(chi.tag()));
}

Decomposition decompose(const ClassFunction &chi)
{
  if (chi.tag() != GroupTag::A5)
    throw MismatchError("decomposition is into A5 irreducibles");
  const auto &t = a5_table();
  Decomposition out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const CycloNum m = checked_integer(inner_product(chi, t.rows[i]));
    long k = m.to_rational().numerator().get_si();
    if (k < 0)
      throw DomainError("negative multiplicity of " + t.labels[i] + "; not a character");
    if (k > 0)
      out.emplace_back(t.labels[i], k);
  }
  return out;
}

std::string to_string(const Decomposition &d)
{
  std::string s;
  for (const auto &[label, k] : d) {
    if (!s.empty())
      s += " + ";
    s += (k == 1 ? "" : std::to_string(k) + "*") + label;
  }
  return s.empty() ? "0" : s;
}

ClassFunction induced_character(const GroupTable &h, const std::vector<CycloNum> &values)
{
  const auto &d = class_data(GroupTag::A5);
  if (!perm::is_subgroup(h, d.group))
    throw DomainError("induction requires a subgroup of A5");
  if (values.size() != h.order())
    throw MismatchError("one value per subgroup element is required");
  for (std::size_t i = 0; i < h.order(); ++i)
    for (const auto &y : h.elements())
      if (values[*h.index_of(perm::conjugate(h[i], y))] != values[i])
        throw DomainError("values are not constant on subgroup classes");

  std::vector<CycloNum> out;
  for (const auto &g : d.representatives) {
    CycloNum sum;
    for (const auto &x : d.group.elements())
      if (auto idx = h.index_of(perm::conjugate(g, x)))
        sum += values[*idx];
    out.push_back(sum * CycloNum(Rational(1, static_cast<std::int64_t>(h.order()))));
  }
  return {GroupTag::A5, std::move(out)};
}

ClassFunction restrict_to_a5(const ClassFunction &chi)
{
  if (chi.tag() != GroupTag::S5)
    throw MismatchError("restriction expects an S5 class function");
  std::vector<CycloNum> v;
  for (const auto &r : class_data(GroupTag::A5).representatives)
    v.push_back(chi.at(r));
  return {GroupTag::A5, std::move(v)};
}

ClassFunction s5_six_dimensional()
{
  return {GroupTag::S5, {6, 0, -2, 0, 0, 0, 1}};
}

ClassFunction s5_sign()
{
  std::vector<CycloNum> v;
  for (const auto &r : class_data(GroupTag::S5).representatives)
    v.emplace_back(r.is_even() ? 1 : -1);
  return {GroupTag::S5, std::move(v)};
}

} // namespace winger::chars
