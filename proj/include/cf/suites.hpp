#pragma once

#include <cstdint>

#include "cf/serialize.hpp"

namespace cf {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int dims = 2;  // max space dimension
  int cases = 10;
  Field field = Field::Qi;
  // negative controls, reachable only from test builds of the CLI
  bool drop_koszul = false;
  bool kappa_one = false;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions opt;
  std::vector<CoherenceReport> results;  // by case index; case k uses seed + k
  double wall_seconds = 0;               // not serialized

  int passed() const;
  bool pass() const { return passed() == static_cast<int>(results.size()); }
};

const std::vector<std::string>& suite_names();
// InvalidInput for an unknown suite or bad options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

Json suite_report_to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const Json& j);
// "ok: N/N", or the failing cases with diagram, pair and first differing entry.
std::string suite_report_text(const SuiteReport& r);

}  // namespace cf
