#include "etabench/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace etabench {

namespace {

using Clock = std::chrono::steady_clock;

BenchRecord timeTrial(const std::string& suite, std::uint32_t size,
                      Backend backend, std::uint32_t trial,
                      const RawProgram& prog, bool speculate) {
  CheckOptions opts{backend, speculate};
  auto t0 = Clock::now();
  CheckResult res = checkProgram(prog, opts);
  auto t1 = Clock::now();
  BenchRecord rec;
  rec.suite = suite;
  rec.size = size;
  rec.backend = backend;
  rec.trial = trial;
  rec.wallNs = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  if (rec.wallNs == 0) rec.wallNs = 1;  // wall time > 0 by contract
  rec.unfolds = res.stats.unfolds;
  rec.accepted = res.ok();
  return rec;
}

BackendStats statsFor(const std::vector<BenchRecord>& records,
                      Backend backend) {
  BackendStats s;
  std::vector<double> xs;
  double unfolds = 0;
  for (const BenchRecord& r : records) {
    if (r.backend != backend) continue;
    xs.push_back(static_cast<double>(r.wallNs));
    unfolds += static_cast<double>(r.unfolds);
    s.accepted = r.accepted;
  }
  if (xs.empty()) return s;
  double sum = 0;
  for (double x : xs) sum += x;
  s.meanNs = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - s.meanNs) * (x - s.meanNs);
    s.sdNs = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  s.meanUnfolds = unfolds / static_cast<double>(xs.size());
  return s;
}

}  // namespace

BenchRun runBenchOnProgram(const std::string& suiteName, std::uint32_t size,
                           const RawProgram& prog, const BenchConfig& config) {
  BenchRun run;
  std::vector<Backend> backends;
  if (config.runSyntactic) backends.push_back(Backend::Syntactic);
  if (config.runTyped) backends.push_back(Backend::Typed);

  for (Backend b : backends) {
    for (std::uint32_t w = 0; w < config.warmup; ++w) {
      timeTrial(suiteName, size, b, 0, prog, config.speculate);
    }
    for (std::uint32_t t = 1; t <= config.trials; ++t) {
      run.records.push_back(
          timeTrial(suiteName, size, b, t, prog, config.speculate));
    }
  }

  // nondeterminism detector: the verdict must not vary across trials
  for (Backend b : backends) {
    bool first = true, verdict = false;
    for (const BenchRecord& r : run.records) {
      if (r.backend != b) continue;
      if (first) {
        verdict = r.accepted;
        first = false;
      } else if (r.accepted != verdict) {
        run.verdictsConsistent = false;
      }
    }
  }

  run.summary.suite = suiteName;
  run.summary.size = size;
  run.summary.trials = config.trials;
  if (config.runSyntactic) {
    run.summary.syntactic = statsFor(run.records, Backend::Syntactic);
  }
  if (config.runTyped) {
    run.summary.typed = statsFor(run.records, Backend::Typed);
  }
  if (run.summary.syntactic && run.summary.typed &&
      run.summary.syntactic->meanNs > 0) {
    run.summary.normalizedTyped =
        run.summary.typed->meanNs / run.summary.syntactic->meanNs;
  }
  return run;
}

BenchRun runBench(const BenchConfig& config) {
  std::string src = generate(config.suite);
  ParseResult parsed = parseProgram(src);
  if (!parsed.ok()) {
    std::string msg = "generated suite failed to parse";
    if (!parsed.diagnostics.empty()) {
      msg += ": " + parsed.diagnostics.front().message;
    }
    throw BenchParseError(msg);
  }
  return runBenchOnProgram(std::string(familyName(config.suite.family)),
                           config.suite.size, *parsed.program, config);
}

std::string toCsv(const std::vector<BenchRecord>& records) {
  std::string out = "suite,size,backend,trial,wall_ns,unfolds,verdict\n";
  for (const BenchRecord& r : records) {
    out += r.suite;
    out += ',';
    out += std::to_string(r.size);
    out += ',';
    out += backendName(r.backend);
    out += ',';
    out += std::to_string(r.trial);
    out += ',';
    out += std::to_string(r.wallNs);
    out += ',';
    out += std::to_string(r.unfolds);
    out += ',';
    out += r.accepted ? "accept" : "reject";
    out += '\n';
  }
  return out;
}

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

}  // namespace

std::string formatSummary(const Summary& summary, bool color) {
  const char* bold = color ? "\x1b[1m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  std::string out;
  out += std::string(bold) + "suite=" + summary.suite +
         " size=" + std::to_string(summary.size) +
         " trials=" + std::to_string(summary.trials) + reset + "\n";
  out += "  backend      mean_ms        sd_ms     unfolds     norm\n";
  auto row = [&](const char* name, const BackendStats& s, double norm) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-10s %10s   %10s  %10s   %6s  %s\n",
                  name, fixed(s.meanNs / 1e6, 3).c_str(),
                  fixed(s.sdNs / 1e6, 3).c_str(),
                  fixed(s.meanUnfolds, 1).c_str(), fixed(norm, 3).c_str(),
                  s.accepted ? "accept" : "reject");
    out += buf;
  };
  if (summary.syntactic) row("syntactic", *summary.syntactic, 1.0);
  if (summary.typed) {
    row("typed", *summary.typed,
        summary.normalizedTyped ? *summary.normalizedTyped : 0.0);
  }
  return out;
}

}  // namespace etabench
