#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chiral/digits.hpp"
#include "chiral/enumerator.hpp"
#include "chiral/primality.hpp"

namespace chiral {

// Truncation chain of `subject`, shortest entry first, last entry = subject.
// For the standard gap-free case entry i has i+1 digits. `verdicts` parallels
// `chain`; all_prime is true iff no entry is Composite.
struct ChainReport {
  DigitString subject;
  Direction direction;
  std::vector<DigitString> chain;
  std::vector<PrimalityVerdict> verdicts;
  bool all_prime = false;
};

struct DigitStats {
  DigitString subject;
  std::array<uint64_t, 10> per_digit_counts{};
  uint64_t odd_count = 0;
  uint64_t even_count = 0;
  std::optional<DigitString> longest_even_run = std::nullopt;  // leftmost on ties; unset when no even digit
  uint64_t longest_even_run_length = 0;
};

ChainReport truncation_chain(const DigitString& p, Direction d, const PrimalityConfig& cfg = {});

// True iff every chain entry is prime. Inputs containing a 0 digit belong to
// the anomalous module and are rejected here.
bool is_truncatable(const DigitString& p, Direction d, const PrimalityConfig& cfg = {});

DigitStats digit_stats(const DigitString& p);

// Proper prefixes (repeated right truncation) that test prime, longest first.
std::vector<std::pair<size_t, DigitString>> prime_prefixes(const DigitString& p,
                                                           const PrimalityConfig& cfg = {});

}  // namespace chiral
