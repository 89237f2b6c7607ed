#ifndef CUTLATTICE_REPORT_HPP
#define CUTLATTICE_REPORT_HPP

#include <string>
#include <vector>

#include "cutlattice/json_io.hpp"

namespace cutlattice {

struct ReportOptions {
  bool tiny = false;           // skip searches above the tiny budget
  int threads = 0;
  std::string atlas_override;  // path of an external atlas JSON to re-check
};

struct ReportEntry {
  enum class Status { Pass, Fail, Skipped };
  std::string id;        // "c<criterion>.<check>"
  std::string detail;
  std::string computed;
  std::string expected;
  Status status = Status::Fail;
};

struct Report {
  std::vector<ReportEntry> entries;
  int passed = 0, failed = 0, skipped = 0;
  bool all_pass() const { return failed == 0; }
};

// Runs the acceptance suite in a fixed order. Deterministic given options.
Report run_report(const ReportOptions& opts = {});

Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

// Helper shared with tests: locate one shortest cycle as a vertex list.
std::vector<int> shortest_cycle(const Skeleton& g);

}  // namespace cutlattice

#endif
