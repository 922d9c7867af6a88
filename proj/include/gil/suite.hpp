#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gil/enumerate.hpp"
#include "gil/laws.hpp"

namespace gil {

using ojson = nlohmann::ordered_json;

struct LawStats {
  std::string law_id;
  std::int64_t pass = 0, vacuous = 0, violation = 0;
};

// A violation with its full instance payload, so it can be replayed later.
struct ViolationRecord {
  std::string law_id;
  ojson instance;
  Witness witness;
};

struct SuiteOptions {
  int workers = 1;
  Faults faults;  // test-only predicate corruptions
};

struct SuiteReport {
  std::string catalog_version;
  StructureQuery query;
  std::int64_t structures = 0;
  std::int64_t subset_instances = 0;
  std::int64_t subset_pair_instances = 0;
  std::int64_t ifs_instances = 0;
  std::int64_t ifs_pair_instances = 0;
  std::vector<LawStats> laws;              // catalog order
  std::vector<ViolationRecord> violations; // canonical instance order
  std::int64_t total_violations() const;
};

// Reference implementation: one plain loop over the enumerated structures.
SuiteReport run_suite_serial(const LawCatalog& catalog, const StructureQuery& query,
                             const SuiteOptions& options = {});

// OpenMP runner: structures are independent work units; verdicts are merged
// back in canonical structure order, so the report is byte-identical for any
// worker count (and to the serial reference).
SuiteReport run_suite(const LawCatalog& catalog, const StructureQuery& query,
                      const SuiteOptions& options = {});

// Rebuilds the instance of a recorded violation and re-runs its law.
LawVerdict replay_violation(const ViolationRecord& record, const LawOptions& options = {});

struct HuntResult {
  bool found = false;
  ViolationRecord record;  // valid when found
  std::int64_t structures_scanned = 0;
  std::int64_t instances_scanned = 0;
};

// Re-runs one law over the query's instance stream with an optional named
// hypothesis removed; returns the first violation or an exhausted marker.
HuntResult hunt_counterexample(const std::string& law_id, const StructureQuery& query,
                               const std::string& dropped_hypothesis = "",
                               const SuiteOptions& options = {});

ojson violation_to_json(const ViolationRecord& record);
ojson suite_report_to_json(const SuiteReport& report);
std::string suite_report_to_table(const SuiteReport& report);

}  // namespace gil
