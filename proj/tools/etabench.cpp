#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "etabench/bench.hpp"

namespace {

using namespace etabench;

bool colorEnabled(bool forStdout) {
  if (const char* v = std::getenv("ETABENCH_COLOR"); v && v == std::string("0")) {
    return false;
  }
  return isatty(forStdout ? STDOUT_FILENO : STDERR_FILENO) != 0;
}

std::optional<std::string> readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr int kExitOk = 0;
constexpr int kExitTypeError = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInconsistent = 3;

int runCheck(const std::string& file, const std::string& backendStr) {
  auto backend = backendFromName(backendStr);
  if (!backend) {
    std::cerr << "error: unknown backend '" << backendStr << "'\n";
    return kExitParseError;
  }
  auto src = readFile(file);
  if (!src) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return kExitParseError;
  }
  ParseResult parsed = parseProgram(*src);
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.diagnostics) {
      std::cerr << formatDiagnostic(d, *src) << "\n";
    }
    return kExitParseError;
  }
  CheckResult res = checkProgram(*parsed.program, CheckOptions{*backend, true});
  if (!res.ok()) {
    bool color = colorEnabled(false);
    if (color) std::cerr << "\x1b[31m";
    std::cerr << formatTypeError(*res.error, *src);
    if (color) std::cerr << "\x1b[0m";
    std::cerr << "\n";
    return kExitTypeError;
  }
  std::cerr << "ok: " << res.tops.size() << " definitions ("
            << backendName(*backend) << " backend, " << res.stats.unfolds
            << " unfolds)\n";
  return kExitOk;
}

int runGen(const std::string& suiteStr, std::uint32_t size,
           std::uint64_t seed, const std::string& outPath) {
  auto family = familyFromName(suiteStr);
  if (!family) {
    std::cerr << "error: unknown suite '" << suiteStr << "'\n";
    return kExitParseError;
  }
  std::string src = generate(SuiteSpec{*family, size, seed});
  std::ofstream out(outPath, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << outPath << "'\n";
    return kExitParseError;
  }
  out << src;
  return kExitOk;
}

int runBenchCmd(const std::string& suiteStr, std::uint32_t size,
                std::uint32_t trials, const std::string& backendsStr,
                std::uint64_t seed, const std::string& outPath,
                std::uint32_t warmup, bool noSpeculate) {
  auto family = familyFromName(suiteStr);
  if (!family) {
    std::cerr << "error: unknown suite '" << suiteStr << "'\n";
    return kExitParseError;
  }
  BenchConfig config;
  config.suite = SuiteSpec{*family, size, seed};
  config.trials = trials;
  config.warmup = warmup;
  config.speculate = !noSpeculate;
  if (backendsStr == "syntactic") {
    config.runTyped = false;
  } else if (backendsStr == "typed") {
    config.runSyntactic = false;
  } else if (backendsStr != "both") {
    std::cerr << "error: unknown backends selection '" << backendsStr
              << "'\n";
    return kExitParseError;
  }

  BenchRun run;
  try {
    run = runBench(config);
  } catch (const BenchParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  if (!outPath.empty()) {
    std::ofstream out(outPath, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << outPath << "'\n";
      return kExitParseError;
    }
    out << toCsv(run.records);
  }
  std::cout << formatSummary(run.summary, colorEnabled(true));
  if (!run.verdictsConsistent) {
    std::cerr << "error: verdict changed across trials (nondeterminism)\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"etabench: a small dependent type-checker with two "
               "judgmental-equality backends and a benchmark harness"};
  app.require_subcommand(1);

  // check
  std::string checkFile;
  std::string checkBackend = "syntactic";
  auto* check = app.add_subcommand("check", "type-check a .ett file");
  check->add_option("file", checkFile, "input file")->required();
  check->add_option("--backend", checkBackend,
                    "conversion backend: syntactic|typed");

  // bench
  std::string benchSuite;
  std::uint32_t benchSize = 1;
  std::uint32_t benchTrials = 10;
  std::string benchBackends = "both";
  std::uint64_t benchSeed = 1;
  std::string benchOut;
  std::uint32_t benchWarmup = 0;
  bool benchNoSpeculate = false;
  auto* bench =
      app.add_subcommand("bench", "time checkProgram over a generated suite");
  bench->add_option("--suite", benchSuite,
                    "stlc|asymptotics|eta|etafree-random")
      ->required();
  bench->add_option("--size", benchSize, "suite size")
      ->required()
      ->check(CLI::Range(1u, 1000000u));
  bench->add_option("--trials", benchTrials, "timed trials per backend")
      ->check(CLI::Range(1u, 100000u));
  bench->add_option("--backends", benchBackends, "syntactic|typed|both");
  bench->add_option("--seed", benchSeed, "seed (etafree-random only)");
  bench->add_option("--out", benchOut, "write per-trial CSV here");
  bench->add_option("--warmup", benchWarmup, "discarded warm-up runs");
  bench->add_flag("--no-speculate", benchNoSpeculate,
                  "disable the glued spine fast path");

  // gen
  std::string genSuite;
  std::uint32_t genSize = 1;
  std::uint64_t genSeed = 1;
  std::string genOut;
  auto* gen = app.add_subcommand("gen", "write a generated suite to a file");
  gen->add_option("--suite", genSuite, "stlc|asymptotics|eta|etafree-random")
      ->required();
  gen->add_option("--size", genSize, "suite size")
      ->required()
      ->check(CLI::Range(1u, 1000000u));
  gen->add_option("--seed", genSeed, "seed (etafree-random only)");
  gen->add_option("--out", genOut, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return runCheck(checkFile, checkBackend);
  if (gen->parsed()) return runGen(genSuite, genSize, genSeed, genOut);
  if (bench->parsed()) {
    return runBenchCmd(benchSuite, benchSize, benchTrials, benchBackends,
                       benchSeed, benchOut, benchWarmup, benchNoSpeculate);
  }
  return kExitOk;
}
