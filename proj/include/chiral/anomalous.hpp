#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/analysis.hpp"
#include "chiral/digits.hpp"
#include "chiral/enumerator.hpp"
#include "chiral/primality.hpp"

namespace chiral {

// block_1 . 0^k1 . block_2 . ... : nonzero-leading blocks separated by runs
// of zeros. Blocks are canonical digit strings; gaps may be zero-length.
class GappedNumber {
 public:
  GappedNumber(std::vector<DigitString> blocks, std::vector<uint32_t> gaps);

  static GappedNumber single(DigitString block);

  // Accepts either a plain decimal string or the compact form "1(0^41)3".
  static GappedNumber parse(std::string_view text);

  // Splits a decimal string into maximal nonzero-digit blocks and zero-run
  // gaps. Inverse of render() when blocks contain no zeros and gaps are >= 1.
  static GappedNumber from_decimal(const DigitString& value);

  const std::vector<DigitString>& blocks() const { return blocks_; }
  const std::vector<uint32_t>& gaps() const { return gaps_; }

  DigitString render() const;
  size_t digit_length() const;   // rendered length, zeros included
  std::string compact() const;   // "13(0^5)9"

  bool operator==(const GappedNumber&) const = default;

 private:
  std::vector<DigitString> blocks_;
  std::vector<uint32_t> gaps_;
};

inline constexpr uint32_t kMaxGapSearchSpan = 100'000;

struct GapHit {
  uint32_t k;
  PrimalityVerdict verdict;
};

// All k in 1..k_max for which prefix . 0^k . suffix tests (probably) prime.
// Divisibility prefilters (trailing digit, digit sum mod 3) run before any
// primality test; both are invariant in k, so a filtered search is O(1).
std::vector<GapHit> gap_search(const DigitString& prefix, const DigitString& suffix,
                               uint32_t k_max, const PrimalityConfig& cfg = {}, int threads = 1);

struct AnomalousHit {
  uint32_t k;
  GappedNumber number;
  PrimalityVerdict verdict;
};

// All k in 1..k_max for which 1 . 0^k . base tests (probably) prime.
std::vector<AnomalousHit> anomalous_extend(const DigitString& base, uint32_t k_max,
                                           const PrimalityConfig& cfg = {}, int threads = 1);

struct AnomalousChainResult {
  bool truncatable = false;  // subject and every stripped truncation prime
  ChainReport chain;         // entries deduplicated across zero gaps
};

// The stripped reading of left truncation: each step removes the leading
// digit and then every leading zero, so truncating through a gap lands
// directly on the next block.
AnomalousChainResult is_anomalously_left_truncatable(const GappedNumber& g,
                                                     const PrimalityConfig& cfg = {});

PrimalityVerdict block_concat_verify(const GappedNumber& g, const PrimalityConfig& cfg = {});

struct BandFinding {
  uint64_t candidate_index = 0;  // position in the lexicographic candidate order
  GappedNumber number;
  PrimalityVerdict verdict;
  bool anomalous_chain = false;
};

struct BandSearchResult {
  std::vector<BandFinding> findings;
  uint64_t examined = 0;
};

// Exhaustive scan for `bands`-block gapped primes that are also anomalously
// left-truncatable, with blocks drawn from left generations of index >=
// min_block_len and gaps in 1..k_max. Candidates are enumerated in
// lexicographic (block indices, gaps) order and capped by `budget`, so
// partial searches are total-ordered and reproducible.
BandSearchResult band_search(const std::vector<Generation>& pool, int bands, int min_block_len,
                             uint32_t k_max, uint64_t budget, const PrimalityConfig& cfg = {},
                             int threads = 1);

}  // namespace chiral
