#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace etabench {

enum class Family { Stlc, Asymptotics, Eta, EtaFreeRandom };

std::optional<Family> familyFromName(std::string_view name);
std::string_view familyName(Family f);

// Same spec, byte-identical output.
struct SuiteSpec {
  Family family = Family::Stlc;
  std::uint32_t size = 1;
  std::uint64_t seed = 1;  // EtaFreeRandom only
};

// Documented linear-congruential generator so corpora reproduce bit-exactly
// on any platform: state' = state * 6364136223846793005 + 1442695040888963407
// (mod 2^64); each draw returns the top 32 bits of the new state.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  // Uniform-ish draw in [0, n); n > 0. Bias is irrelevant here, determinism
  // is what matters.
  std::uint32_t below(std::uint32_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Church-encoded simply typed λ-calculus syntax with `size` object-term
// definitions whose types chain redexes through top-level definitions.
// Checks under both backends.
std::string genStlc(std::uint32_t size);

// Church-numeral arithmetic and tree mirroring: `size` conversion
// obligations, all heavy computation at the term level with simple types.
// Checks under both backends.
std::string genAsymptotics(std::uint32_t size);

// `size` definitions each requiring Unit-η or Σ-η: the typed backend
// accepts all of them, the syntactic backend rejects each.
std::string genEta(std::uint32_t size);

// Seeded pseudo-random well-scoped programs over Π/λ/app/let/pairs that
// avoid Unit-typed conversion obligations and pair/neutral mixing. May be
// ill-typed; both backends must agree on the verdict.
std::string genEtaFreeRandom(std::uint32_t size, std::uint64_t seed);

std::string generate(const SuiteSpec& spec);

}  // namespace etabench
