#pragma once

#include "etabench/benchgen.hpp"
#include "etabench/elaborate.hpp"

namespace etabench {

// One timed trial. Wall time covers elaboration + conversion only; parsing
// happens once, outside the clock.
struct BenchRecord {
  std::string suite;
  std::uint32_t size = 0;
  Backend backend = Backend::Syntactic;
  std::uint32_t trial = 1;  // 1-based, dense
  std::uint64_t wallNs = 0;
  std::uint64_t unfolds = 0;
  bool accepted = false;
};

struct BackendStats {
  double meanNs = 0;
  double sdNs = 0;  // sample standard deviation
  double meanUnfolds = 0;
  bool accepted = false;
};

// Per (suite,size) aggregate. The syntactic normalized mean is 1 by
// construction; normalizedTyped = typed mean / syntactic mean.
struct Summary {
  std::string suite;
  std::uint32_t size = 0;
  std::uint32_t trials = 0;
  std::optional<BackendStats> syntactic;
  std::optional<BackendStats> typed;
  std::optional<double> normalizedTyped;
};

struct BenchConfig {
  SuiteSpec suite;
  std::uint32_t trials = 10;
  std::uint32_t warmup = 0;
  bool runSyntactic = true;
  bool runTyped = true;
  bool speculate = true;
};

struct BenchRun {
  std::vector<BenchRecord> records;
  Summary summary;
  bool verdictsConsistent = true;  // per backend, across trials
};

struct BenchParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generate the suite, parse once, then time checkProgram per backend per
// trial. Throws BenchParseError if the generated source fails to parse.
BenchRun runBench(const BenchConfig& config);

// Same, on an already-parsed program (parse time excluded by construction).
BenchRun runBenchOnProgram(const std::string& suiteName, std::uint32_t size,
                           const RawProgram& prog, const BenchConfig& config);

// Stable schema: "suite,size,backend,trial,wall_ns,unfolds,verdict", one row
// per trial, LF line endings.
std::string toCsv(const std::vector<BenchRecord>& records);

std::string formatSummary(const Summary& summary, bool color);

}  // namespace etabench
