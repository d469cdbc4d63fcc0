#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "winger/winger.h"

namespace {

enum Exit { Pass = 0, ClaimFailed = 1, Usage = 2, Internal = 3 };

bool parse_matrix_slot(const std::string &text, int &element, int &entry)
{
  auto colon = text.find(':');
  if (colon == std::string::npos)
    return false;
  try {
    std::size_t used = 0;
    element = std::stoi(text.substr(0, colon), &used);
    if (used != colon)
      return false;
    std::string rest = text.substr(colon + 1);
    entry = std::stoi(rest, &used);
    return used == rest.size() && element >= 0 && entry >= 0;
  } catch (const std::exception &) {
    return false;
  }
}

} // namespace

int main(int argc, char **argv)
{
  std::vector<std::string> suites;
  for (std::size_t i = 0; i < winger_suite_count(); ++i)
    suites.emplace_back(winger_suite_name(i));

  CLI::App app{"Exact verification of the icosahedral sextic pencil and its A5 covers"};
  app.set_version_flag("--version", winger_version());

  std::string suite, json_path, convention = "rtl", matrix_slot;
  int digits = 12, corrupt_f = -1;
  unsigned threads = 0;
  bool deep = false, timing = false, quiet = false;

  std::string names;
  for (const auto &s : suites)
    names += (names.empty() ? "" : ", ") + s;
  app.add_option("subcommand", suite, "One of: " + names)->required();
  app.add_option("--json", json_path, "Write the claim report as JSON to PATH ('-' for stdout)");
  app.add_flag("--deep", deep, "Also run the slow discriminant certificate");
  app.add_option("--convention", convention, "Composition convention for permutation products")
      ->check(CLI::IsMember({"rtl", "ltr"}));
  app.add_option("--digits", digits, "Digits of decimal embeddings in tables")->check(CLI::Range(1, 200));
  app.add_flag("--timing", timing, "Record wall-clock milliseconds per claim");
  app.add_option("--threads", threads, "Worker threads, 0 for all cores");
  app.add_option("--corrupt-f", corrupt_f, "Perturb the coefficient of the IDX-th sextic monomial of F (0..27)")
      ->check(CLI::Range(0, 27));
  app.add_option("--corrupt-matrix", matrix_slot, "Perturb entry ENTRY (0..8) of group element ELEM (0..59)")
      ->type_name("ELEM:ENTRY");
  app.add_flag("-q,--quiet", quiet, "Suppress the text report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? Pass : Usage;
  }

  winger_options opts;
  winger_options_init(&opts);
  opts.convention = convention == "ltr" ? WINGER_LTR : WINGER_RTL;
  opts.deep = deep;
  opts.timing = timing;
  opts.digits = digits;
  opts.threads = threads;
  opts.corrupt_f = corrupt_f;
  if (!matrix_slot.empty() &&
      !parse_matrix_slot(matrix_slot, opts.corrupt_matrix_element, opts.corrupt_matrix_entry)) {
    std::cerr << "--corrupt-matrix expects ELEM:ENTRY, got '" << matrix_slot << "'\n";
    return Usage;
  }

  winger_report *report = nullptr;
  switch (winger_run(suite.c_str(), &opts, &report)) {
  case WINGER_OK:
    break;
  case WINGER_ERR_UNKNOWN_SUITE:
    std::cerr << winger_last_error() << "; expected one of " << names << "\n";
    return Usage;
  case WINGER_ERR_INVALID_ARGUMENT:
    std::cerr << "invalid argument: " << winger_last_error() << "\n";
    return Usage;
  default:
    std::cerr << "internal error: " << winger_last_error() << "\n";
    return Internal;
  }

  const bool json_stdout = json_path == "-";
  if (!quiet && !json_stdout)
    std::cout << winger_report_text(report);
  if (json_stdout) {
    std::cout << winger_report_json(report);
  } else if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << winger_report_json(report);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      winger_report_free(report);
      return Usage;
    }
  }
  std::cout.flush();
  int code = winger_report_failed_count(report) == 0 ? Pass : ClaimFailed;
  winger_report_free(report);
  return code;
}
