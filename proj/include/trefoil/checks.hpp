/* Named verification checks and report rendering.
 *
 * A check is a self-contained computation that certifies one claim of the
 * classification: it recomputes the claimed quantity from scratch through the
 * other modules and records a witness (the inputs and observed values) as
 * JSON.  Checks are grouped into suites; `all` runs every suite in a fixed
 * order.
 *
 * Reports come in two layers.  The *body* — suite name, per-check status and
 * witness, and the summary counts — depends only on the mathematics, so two
 * runs with the same options produce byte-identical bodies (keys sorted, no
 * timings, no floats).  Timings, the random seed, worker count and timestamp
 * live in a separate *meta* block that makes no stability promise. */

#ifndef TREFOIL_CHECKS_HPP_
#define TREFOIL_CHECKS_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace trefoil {

struct CheckResult {
  std::string id;      // "<module>.<slug>"
  std::string suite;   // owning suite name
  std::string anchor;  // one-sentence statement of the certified claim
  std::string status;  // "pass" | "fail" | "skipped"
  nlohmann::json witness = nlohmann::json::object();
  double elapsed_seconds = 0.0;  // reported only in the meta block
};

struct RunOptions {
  double budget_seconds = 600.0;  // per-check advisory budget (see below)
  int workers = 1;                // checks run in parallel when > 1
  unsigned long seed = 0;         // recorded in the meta block; every check is
                                  // deterministic, so the seed never changes a
                                  // verdict
};

/* Suite names in canonical order; the last entry is "all". */
const std::vector<std::string>& suite_names();

/* True iff `name` names a suite. */
bool is_suite(const std::string& name);

/* Run one suite.  Each check whose estimated cost exceeds the budget is
 * reported as "skipped" with the estimate in its witness; a check that
 * throws is reported as "fail" with the error message.  Results come back
 * in catalog order regardless of worker count.  Throws DomainError for an
 * unknown suite name. */
std::vector<CheckResult> run_suite(const std::string& name,
                                   const RunOptions& opts = RunOptions());

/* Deterministic report body: suite, checks (id/anchor/status/witness), and
 * summary counts.  Byte-identical across runs with equal outcomes. */
nlohmann::json report_body(const std::string& suite,
                           const std::vector<CheckResult>& results);

/* Full JSON document {"body": ..., "meta": ...}; only the body is stable. */
nlohmann::json report_document(const std::string& suite,
                               const std::vector<CheckResult>& results,
                               const RunOptions& opts);

/* Markdown rendering of the stable body (no timings). */
std::string report_markdown(const std::string& suite,
                            const std::vector<CheckResult>& results);

}  // namespace trefoil

#endif  // TREFOIL_CHECKS_HPP_
