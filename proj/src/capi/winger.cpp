#include "winger/winger.h"

#include <exception>
#include <string>

#include "exactfield/errors.hpp"
#include "report/report.hpp"

struct winger_report
{
  winger::report::Report report;
  std::string json, text;
};

namespace {

thread_local std::string last_error;

winger_status fail(winger_status s, const std::string &msg)
{
  last_error = msg;
  return s;
}

} // namespace

extern "C" {

void winger_options_init(winger_options *opts)
{
  if (!opts)
    return;
  opts->convention = WINGER_RTL;
  opts->deep = 0;
  opts->timing = 0;
  opts->digits = 12;
  opts->corrupt_f = -1;
  opts->corrupt_matrix_element = -1;
  opts->corrupt_matrix_entry = -1;
  opts->threads = 0;
}

winger_status winger_run(const char *suite, const winger_options *opts, winger_report **out)
{
  using namespace winger::report;
  last_error.clear();
  if (!suite || !out)
    return fail(WINGER_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  winger_options o;
  winger_options_init(&o);
  if (opts)
    o = *opts;

  Suite s;
  try {
    s = parse_suite(suite);
  } catch (const winger::Error &e) {
    return fail(WINGER_ERR_UNKNOWN_SUITE, e.what());
  }
  Options cfg;
  if (o.convention != WINGER_RTL && o.convention != WINGER_LTR)
    return fail(WINGER_ERR_INVALID_ARGUMENT, "unknown convention");
  cfg.convention = o.convention == WINGER_LTR ? winger::hurwitz::Convention::Ltr : winger::hurwitz::Convention::Rtl;
  cfg.deep = o.deep != 0;
  cfg.timing = o.timing != 0;
  cfg.digits = o.digits;
  cfg.threads = o.threads;
  if (o.corrupt_f >= 0)
    cfg.corrupt_f = static_cast<std::size_t>(o.corrupt_f);
  if ((o.corrupt_matrix_element >= 0) != (o.corrupt_matrix_entry >= 0))
    return fail(WINGER_ERR_INVALID_ARGUMENT, "matrix corruption needs both an element and an entry");
  if (o.corrupt_matrix_element >= 0)
    cfg.corrupt_matrix = MatrixCorruption{static_cast<std::size_t>(o.corrupt_matrix_element),
                                          static_cast<std::size_t>(o.corrupt_matrix_entry)};
  try {
    auto *r = new winger_report{run_suite(s, cfg), {}, {}};
    r->json = r->report.to_json();
    r->text = r->report.to_text();
    *out = r;
    return WINGER_OK;
  } catch (const winger::Error &e) {
    return fail(WINGER_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception &e) {
    return fail(WINGER_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WINGER_ERR_INTERNAL, "unknown exception");
  }
}

size_t winger_report_claim_count(const winger_report *r)
{
  return r ? r->report.claims.size() : 0;
}

size_t winger_report_failed_count(const winger_report *r)
{
  return r ? r->report.failed_count() : 0;
}

const char *winger_report_claim_id(const winger_report *r, size_t i)
{
  return r && i < r->report.claims.size() ? r->report.claims[i].id.c_str() : nullptr;
}

const char *winger_report_claim_witness(const winger_report *r, size_t i)
{
  return r && i < r->report.claims.size() ? r->report.claims[i].witness.c_str() : nullptr;
}

winger_claim_status winger_report_claim_status(const winger_report *r, size_t i)
{
  if (!r || i >= r->report.claims.size())
    return WINGER_CLAIM_FAIL;
  switch (r->report.claims[i].status) {
  case winger::report::Status::Pass:
    return WINGER_CLAIM_PASS;
  case winger::report::Status::Skipped:
    return WINGER_CLAIM_SKIPPED;
  default:
    return WINGER_CLAIM_FAIL;
  }
}

size_t winger_report_find(const winger_report *r, const char *id)
{
  if (!r || !id)
    return static_cast<size_t>(-1);
  for (size_t i = 0; i < r->report.claims.size(); ++i)
    if (r->report.claims[i].id == id)
      return i;
  return static_cast<size_t>(-1);
}

const char *winger_report_json(const winger_report *r)
{
  return r ? r->json.c_str() : "";
}

const char *winger_report_text(const winger_report *r)
{
  return r ? r->text.c_str() : "";
}

void winger_report_free(winger_report *r)
{
  delete r;
}

size_t winger_suite_count(void)
{
  return winger::report::suite_names().size();
}

const char *winger_suite_name(size_t i)
{
  const auto &names = winger::report::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

const char *winger_criterion_id(size_t criterion)
{
  const auto &ids = winger::report::criterion_ids();
  return criterion >= 1 && criterion <= ids.size() ? ids[criterion - 1].c_str() : nullptr;
}

const char *winger_last_error(void)
{
  return last_error.c_str();
}

const char *winger_version(void)
{
  return winger::report::version();
}

} // extern "C"
