/* trefoil: batch verification driver.
 *
 *   trefoil verify --suite <name> [--json PATH] [--markdown PATH]
 *                  [--budget SECONDS] [--workers N] [--seed N]
 *
 * Runs the named suite of checks, prints one line per check, and optionally
 * writes the JSON and markdown reports.  Exit codes: 0 every executed check
 * passed (skipped checks allowed), 1 at least one check failed, 2 usage
 * error or unknown suite, 3 a report file could not be written. */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trefoil/checks.hpp"

namespace {

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  out.flush();
  return out.good();
}

std::string suite_list() {
  std::string s;
  for (const std::string& name : trefoil::suite_names()) {
    if (!s.empty()) s += ", ";
    s += name;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trefoil: exact recomputation of the toolkit's certified claims"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run a check suite and write reports");
  std::string suite;
  std::string json_path;
  std::string markdown_path;
  trefoil::RunOptions opts;
  verify->add_option("--suite", suite, "suite to run: " + suite_list())->required();
  verify->add_option("--json", json_path, "write the JSON report to this path");
  verify->add_option("--markdown", markdown_path, "write the markdown report to this path");
  verify->add_option("--budget", opts.budget_seconds,
                     "per-check budget in seconds; checks estimated to cost more are skipped")
      ->check(CLI::PositiveNumber);
  verify->add_option("--workers", opts.workers, "worker threads")->check(CLI::Range(1, 64));
  verify->add_option("--seed", opts.seed, "seed recorded in the report metadata");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 2;
  }

  if (!trefoil::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'; available: " << suite_list() << '\n';
    return 2;
  }

  std::vector<trefoil::CheckResult> results;
  try {
    results = trefoil::run_suite(suite, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  long failed = 0, skipped = 0;
  for (const trefoil::CheckResult& r : results) {
    if (r.status == "fail") ++failed;
    if (r.status == "skipped") ++skipped;
    std::cout << '[' << r.status << "] " << r.id;
    if (r.status != "skipped")
      std::cout << " (" << std::fixed << std::setprecision(1) << r.elapsed_seconds << "s)";
    std::cout << '\n';
  }
  const long passed = static_cast<long>(results.size()) - failed - skipped;
  std::cout << results.size() << " checks: " << passed << " passed, " << failed
            << " failed, " << skipped << " skipped\n";

  if (!json_path.empty()) {
    const nlohmann::json doc = trefoil::report_document(suite, results, opts);
    if (!write_file(json_path, doc.dump(2) + "\n")) {
      std::cerr << "error: cannot write JSON report to '" << json_path << "'\n";
      return 3;
    }
  }
  if (!markdown_path.empty() &&
      !write_file(markdown_path, trefoil::report_markdown(suite, results))) {
    std::cerr << "error: cannot write markdown report to '" << markdown_path << "'\n";
    return 3;
  }
  return failed > 0 ? 1 : 0;
}
