#include "report/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "exactfield/errors.hpp"

namespace winger::report {

const char *status_name(Status s)
{
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skipped:
    return "skipped";
  }
  return "fail";
}

std::size_t Report::failed_count() const
{
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [](const Claim &c) { return c.status == Status::Fail; }));
}

const Claim *Report::find(const std::string &id) const
{
  auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim &c) { return c.id == id; });
  return it == claims.end() ? nullptr : &*it;
}

std::string Report::to_json() const
{
  nlohmann::ordered_json j;
  j["version"] = version;
  j["convention"] = convention;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto &c : claims)
    j["claims"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"status", status_name(c.status)},
                           {"witness", c.witness},
                           {"millis", c.millis}});
  return j.dump(2) + "\n";
}

std::string Report::to_text() const
{
  std::ostringstream os;
  os << "winger-verifier " << version << " (composition " << convention << ")\n";
  for (const auto &t : tables) {
    os << "\n" << t.title << "\n";
    for (const auto &l : t.lines)
      os << "  " << l << "\n";
  }
  os << "\n";
  std::size_t width = 0;
  for (const auto &c : claims)
    width = std::max(width, c.id.size());
  std::size_t passed = 0, skipped = 0;
  for (const auto &c : claims) {
    std::string status = status_name(c.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << status << std::string(8 - status.size(), ' ') << c.id << std::string(width + 2 - c.id.size(), ' ')
       << c.witness;
    if (c.millis > 0)
      os << " [" << c.millis << " ms]";
    os << "\n";
    passed += c.status == Status::Pass;
    skipped += c.status == Status::Skipped;
  }
  os << "\n"
     << claims.size() << " claims: " << passed << " passed, " << failed_count() << " failed, " << skipped
     << " skipped\n";
  return os.str();
}

const char *suite_name(Suite s)
{
  static const char *names[] = {"characters", "invariants", "pencil",   "tuples", "orbits",
                                "covers",     "degenerations", "homology", "binary", "all"};
  return names[static_cast<int>(s)];
}

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (int s = 0; s <= static_cast<int>(Suite::All); ++s)
      out.emplace_back(suite_name(static_cast<Suite>(s)));
    return out;
  }();
  return names;
}

Suite parse_suite(const std::string &name)
{
  const auto &names = suite_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw DomainError("unknown subcommand '" + name + "'");
  return static_cast<Suite>(it - names.begin());
}

const std::vector<std::string> &criterion_ids()
{
  static const std::vector<std::string> ids = {
      "group-reconstruction", "invariance",      "singular-fibers", "molien",         "characters",
      "homology-lattice",     "tuples",          "braid-orbits",    "riemann-hurwitz", "degenerations",
      "binary-icosahedral",   "fault-injection", "discriminant"};
  return ids;
}

const char *version()
{
  return WINGER_VERSION;
}

} // namespace winger::report
