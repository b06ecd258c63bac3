#include "chiral/anomalous.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "chiral/parallel.hpp"

namespace chiral {
namespace {

bool divisible_by_2_or_5(int last_digit) {
  return last_digit % 2 == 0 || last_digit == 5;
}

DigitString assemble(const DigitString& prefix, uint32_t k, const DigitString& suffix) {
  std::string s;
  s.reserve(prefix.length() + k + suffix.length());
  s += prefix.str();
  s.append(k, '0');
  s += suffix.str();
  return DigitString(s);
}

}  // namespace

GappedNumber::GappedNumber(std::vector<DigitString> blocks, std::vector<uint32_t> gaps)
    : blocks_(std::move(blocks)), gaps_(std::move(gaps)) {
  if (blocks_.empty()) throw std::invalid_argument("GappedNumber: no blocks");
  if (gaps_.size() != blocks_.size() - 1)
    throw std::invalid_argument("GappedNumber: need exactly one gap between consecutive blocks");
  for (const DigitString& b : blocks_)
    if (!b.is_canonical())
      throw std::invalid_argument("GappedNumber: block \"" + b.str() + "\" has a leading zero");
  if (blocks_.size() > 1 && blocks_.front().str() == "0")
    throw std::invalid_argument("GappedNumber: first block must be nonzero");
}

GappedNumber GappedNumber::single(DigitString block) {
  return GappedNumber({std::move(block)}, {});
}

GappedNumber GappedNumber::parse(std::string_view text) {
  std::vector<DigitString> blocks;
  std::vector<uint32_t> gaps;
  size_t pos = 0;
  for (;;) {
    size_t end = pos;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    if (end == pos)
      throw std::invalid_argument("malformed number \"" + std::string(text) + "\"");
    blocks.emplace_back(text.substr(pos, end - pos));
    pos = end;
    if (pos == text.size()) break;
    if (text.compare(pos, 3, "(0^") != 0)
      throw std::invalid_argument("malformed number \"" + std::string(text) + "\"");
    pos += 3;
    size_t close = text.find(')', pos);
    if (close == std::string_view::npos || close == pos)
      throw std::invalid_argument("malformed number \"" + std::string(text) + "\"");
    uint64_t k = 0;
    for (size_t i = pos; i < close; ++i) {
      if (text[i] < '0' || text[i] > '9' || k > kMaxGapSearchSpan)
        throw std::invalid_argument("malformed gap length in \"" + std::string(text) + "\"");
      k = k * 10 + static_cast<uint64_t>(text[i] - '0');
    }
    gaps.push_back(static_cast<uint32_t>(k));
    pos = close + 1;
  }
  return GappedNumber(std::move(blocks), std::move(gaps));
}

GappedNumber GappedNumber::from_decimal(const DigitString& value) {
  const std::string& s = value.str();
  std::vector<DigitString> blocks;
  std::vector<uint32_t> gaps;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = pos;
    while (end < s.size() && s[end] != '0') ++end;
    if (end == pos)
      throw std::invalid_argument("from_decimal: \"" + s + "\" does not start with a block");
    blocks.emplace_back(std::string_view(s).substr(pos, end - pos));
    pos = end;
    if (pos == s.size()) break;
    size_t zend = pos;
    while (zend < s.size() && s[zend] == '0') ++zend;
    if (zend == s.size())
      throw std::invalid_argument("from_decimal: \"" + s + "\" ends in zeros; no canonical split");
    gaps.push_back(static_cast<uint32_t>(zend - pos));
    pos = zend;
  }
  return GappedNumber(std::move(blocks), std::move(gaps));
}

DigitString GappedNumber::render() const {
  std::string s;
  s.reserve(digit_length());
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s.append(gaps_[i - 1], '0');
    s += blocks_[i].str();
  }
  return DigitString(s);
}

size_t GappedNumber::digit_length() const {
  size_t n = 0;
  for (const DigitString& b : blocks_) n += b.length();
  for (uint32_t k : gaps_) n += k;
  return n;
}

std::string GappedNumber::compact() const {
  std::string s = blocks_[0].str();
  for (size_t i = 1; i < blocks_.size(); ++i) {
    s += "(0^" + std::to_string(gaps_[i - 1]) + ")";
    s += blocks_[i].str();
  }
  return s;
}

std::vector<GapHit> gap_search(const DigitString& prefix, const DigitString& suffix,
                               uint32_t k_max, const PrimalityConfig& cfg, int threads) {
  if (!prefix.is_canonical() || prefix.str() == "0")
    throw std::invalid_argument("gap_search: prefix must be canonical and nonzero");
  if (!suffix.is_canonical())
    throw std::invalid_argument("gap_search: suffix must have no leading zero");
  if (k_max > kMaxGapSearchSpan)
    throw std::invalid_argument("gap_search: k_max exceeds " + std::to_string(kMaxGapSearchSpan));

  // Both filters are independent of k: the trailing digit is suffix's, and
  // zeros contribute nothing to the digit sum.
  if (divisible_by_2_or_5(suffix.last_digit())) return {};
  if ((prefix.digit_sum() + suffix.digit_sum()) % 3 == 0) return {};

  std::vector<std::optional<PrimalityVerdict>> verdicts(k_max);
  parallel_for(k_max, threads, [&](uint64_t i) {
    const uint32_t k = static_cast<uint32_t>(i) + 1;
    PrimalityVerdict v = is_prime(assemble(prefix, k, suffix), cfg);
    if (v.not_composite()) verdicts[i] = std::move(v);
  });

  std::vector<GapHit> hits;
  for (uint32_t i = 0; i < k_max; ++i)
    if (verdicts[i]) hits.push_back({i + 1, std::move(*verdicts[i])});
  return hits;
}

std::vector<AnomalousHit> anomalous_extend(const DigitString& base, uint32_t k_max,
                                           const PrimalityConfig& cfg, int threads) {
  if (!base.is_canonical()) throw std::invalid_argument("anomalous_extend: base must be canonical");
  std::vector<AnomalousHit> out;
  for (GapHit& hit : gap_search(DigitString::single(1), base, k_max, cfg, threads)) {
    out.push_back({hit.k, GappedNumber({DigitString::single(1), base}, {hit.k}),
                   std::move(hit.verdict)});
  }
  return out;
}

AnomalousChainResult is_anomalously_left_truncatable(const GappedNumber& g,
                                                     const PrimalityConfig& cfg) {
  const DigitString full = g.render();
  AnomalousChainResult result{false, ChainReport{full, Direction::Left, {}, {}, true}};

  // Stripping after each truncation collapses a zero gap in one step, which
  // is exactly the positional chain with duplicate entries counted once.
  std::optional<DigitString> cur = full;
  while (cur) {
    result.chain.chain.push_back(*cur);
    cur = truncate_left(*cur, true);
  }
  std::reverse(result.chain.chain.begin(), result.chain.chain.end());
  for (const DigitString& entry : result.chain.chain) {
    result.chain.verdicts.push_back(is_prime(entry, cfg));
    if (!result.chain.verdicts.back().not_composite()) result.chain.all_prime = false;
  }
  result.truncatable = result.chain.all_prime;
  return result;
}

PrimalityVerdict block_concat_verify(const GappedNumber& g, const PrimalityConfig& cfg) {
  return is_prime(g.render(), cfg);
}

BandSearchResult band_search(const std::vector<Generation>& pool_gens, int bands,
                             int min_block_len, uint32_t k_max, uint64_t budget,
                             const PrimalityConfig& cfg, int threads) {
  if (min_block_len < 2)
    throw std::invalid_argument("band_search: min_block_len must be >= 2 (single-digit bands "
                                "reduce to the digit-by-digit case)");
  if (bands < 2) throw std::invalid_argument("band_search: bands must be >= 2");
  if (k_max < 1 || k_max > kMaxGapSearchSpan)
    throw std::invalid_argument("band_search: k_max must be in 1.." +
                                std::to_string(kMaxGapSearchSpan));

  std::vector<const DigitString*> pool;
  for (const Generation& g : pool_gens) {
    if (g.direction != Direction::Left)
      throw std::invalid_argument("band_search: pool must come from left generations");
    if (g.index < min_block_len) continue;
    for (const DigitString& m : g.members) pool.push_back(&m);
  }

  BandSearchResult result;
  if (pool.empty() || budget == 0) return result;

  const uint64_t n_blocks = static_cast<uint64_t>(bands);
  const uint64_t n_gaps = n_blocks - 1;
  unsigned __int128 total = 1;
  for (uint64_t i = 0; i < n_blocks && total <= budget; ++i) total *= pool.size();
  for (uint64_t i = 0; i < n_gaps && total <= budget; ++i) total *= k_max;
  const uint64_t examined = static_cast<uint64_t>(std::min<unsigned __int128>(total, budget));
  result.examined = examined;

  std::vector<uint32_t> digit_sum_mod3(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) digit_sum_mod3[i] = pool[i]->digit_sum() % 3;

  // Decodes the lexicographic candidate index: block indices first (radix
  // |pool|), then gaps (radix k_max, offset by 1).
  auto decode = [&](uint64_t index, std::vector<size_t>& block_idx, std::vector<uint32_t>& gaps) {
    for (uint64_t i = n_gaps; i-- > 0;) {
      gaps[i] = static_cast<uint32_t>(index % k_max) + 1;
      index /= k_max;
    }
    for (uint64_t i = n_blocks; i-- > 0;) {
      block_idx[i] = static_cast<size_t>(index % pool.size());
      index /= pool.size();
    }
  };

  const int n_workers = std::max(1, std::min<int>(threads, static_cast<int>(
                                     std::min<uint64_t>(examined, 1024))));
  std::vector<std::vector<BandFinding>> shard_findings(n_workers);
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) {
    const uint64_t lo = examined * static_cast<uint64_t>(w) / n_workers;
    const uint64_t hi = examined * (static_cast<uint64_t>(w) + 1) / n_workers;
    workers.emplace_back([&, lo, hi, w] {
      std::vector<size_t> block_idx(n_blocks);
      std::vector<uint32_t> gaps(n_gaps);
      for (uint64_t index = lo; index < hi; ++index) {
        decode(index, block_idx, gaps);
        uint32_t ds = 0;
        for (size_t b : block_idx) ds += digit_sum_mod3[b];
        if (ds % 3 == 0) continue;
        if (divisible_by_2_or_5(pool[block_idx.back()]->last_digit())) continue;

        std::vector<DigitString> blocks;
        blocks.reserve(n_blocks);
        for (size_t b : block_idx) blocks.push_back(*pool[b]);
        GappedNumber candidate(std::move(blocks), gaps);
        PrimalityVerdict v = block_concat_verify(candidate, cfg);
        if (!v.not_composite()) continue;
        AnomalousChainResult chain = is_anomalously_left_truncatable(candidate, cfg);
        if (!chain.truncatable) continue;
        shard_findings[w].push_back({index, std::move(candidate), std::move(v), true});
      }
    });
  }
  for (auto& t : workers) t.join();

  // Shards cover contiguous ascending index ranges; concatenation in worker
  // order is the global candidate order.
  for (auto& shard : shard_findings)
    for (auto& f : shard) result.findings.push_back(std::move(f));
  return result;
}

}  // namespace chiral
