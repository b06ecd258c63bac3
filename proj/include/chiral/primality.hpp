#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "chiral/digits.hpp"

namespace chiral {

enum class VerdictKind { Prime, Composite, ProbablePrime };

std::string_view to_string(VerdictKind k);

// Prime is only ever reported on a deterministic path: trial division, or
// fixed-base Miller-Rabin inside its proven range. Everything larger is
// ProbablePrime at best.
struct PrimalityVerdict {
  VerdictKind kind = VerdictKind::Composite;
  std::optional<mpz_class> divisor;  // Composite: verified divisor, when one is known
  std::optional<mpz_class> witness;  // Composite: Miller-Rabin base that exposed n
  std::string note;                  // e.g. "unit/zero", "strong Lucas", "perfect square"
  int rounds = 0;                    // ProbablePrime: random MR rounds passed
  bool strong_lucas = false;         // ProbablePrime: strong Lucas check passed
  uint64_t seed = 0;                 // RNG seed used for the random rounds

  bool not_composite() const { return kind != VerdictKind::Composite; }
};

struct PrimalityConfig {
  uint64_t seed = 1;  // drives random MR bases above the deterministic range
  int rounds = 40;
};

// Fixed witness set: the first 13 primes. Deterministic for every
// n < 3,317,044,064,679,887,385,961,981 (Sorenson & Webster bound), which
// covers all 24-digit inputs.
inline constexpr std::array<uint64_t, 13> kMillerRabinBases{2,  3,  5,  7,  11, 13, 17,
                                                            19, 23, 29, 31, 37, 41};
const mpz_class& deterministic_bound();

PrimalityVerdict is_prime(const mpz_class& n, const PrimalityConfig& cfg = {});
PrimalityVerdict is_prime(const DigitString& n, const PrimalityConfig& cfg = {});

// Deterministic fast path for word-sized values; same witness set, same
// verdicts as is_prime restricted to {Prime, Composite}.
bool is_prime_u64(uint64_t n);

// Exact verdict by dividing by every integer in 2..bound. Independent of the
// Miller-Rabin path; exists as a cross-check oracle for tests.
// Requires value(n) < bound^2 and bound <= 10^8.
PrimalityVerdict trial_division_oracle(const DigitString& n, uint64_t bound);

}  // namespace chiral
