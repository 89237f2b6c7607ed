// Acceptance suite: runs every reproduction criterion at its stated
// tolerance (all are exact) and prints one line per criterion plus the
// per-check detail lines. Exits nonzero if anything fails.

#include <cstdio>
#include <map>
#include <string>

#include "cutlattice/report.hpp"

using namespace cutlattice;

int main(int argc, char** argv) {
  ReportOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--tiny") opts.tiny = true;
  }
  Report rep = run_report(opts);

  static const std::map<std::string, std::string> criteria = {
      {"c1", "density table reproduction (36 entries, genera 8x4 + 28x0)"},
      {"c2", "star-honeycomb girths: 3 at m=5, m-1 at m=7,9,11"},
      {"c3", "{5/2,5,3}: counts 120/1200/20 and the 7>6 five-gonal certificate"},
      {"c4", "non-embeddability certificates: 24-cell, K5-K3, pyramid, 600-cell"},
      {"c5", "embedding suite at exact scale/dimension"},
      {"c6", "antipodal quotients and their embeddings; cycle products"},
      {"c7", "simplex scale arithmetic; beta_5 at scale 4 but not 2"},
      {"c8", "cross-module soundness properties"},
      {"c9", "patch integrity: distance stability and interior regularity"},
  };

  std::map<std::string, int> failures, skips, totals;
  for (const auto& e : rep.entries) {
    std::string c = e.id.substr(0, e.id.find('.'));
    ++totals[c];
    if (e.status == ReportEntry::Status::Fail) ++failures[c];
    if (e.status == ReportEntry::Status::Skipped) ++skips[c];
  }
  for (const auto& [c, description] : criteria) {
    const char* verdict = failures[c]          ? "FAIL"
                          : skips[c] == totals[c] ? "SKIP"
                                                  : "PASS";
    std::printf("%s criterion %s: %s\n", verdict, c.c_str(), description.c_str());
  }
  std::printf("--- details ---\n%s", report_to_text(rep).c_str());
  return rep.all_pass() ? 0 : 1;
}
