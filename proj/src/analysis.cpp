#include "chiral/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace chiral {

ChainReport truncation_chain(const DigitString& p, Direction d, const PrimalityConfig& cfg) {
  ChainReport report{p, d, {}, {}, true};
  std::optional<DigitString> cur = p;
  while (cur) {
    report.chain.push_back(*cur);
    cur = d == Direction::Left ? truncate_left(*cur, false) : truncate_right(*cur);
  }
  std::reverse(report.chain.begin(), report.chain.end());
  report.verdicts.reserve(report.chain.size());
  for (const DigitString& entry : report.chain) {
    report.verdicts.push_back(is_prime(entry, cfg));
    if (!report.verdicts.back().not_composite()) report.all_prime = false;
  }
  return report;
}

bool is_truncatable(const DigitString& p, Direction d, const PrimalityConfig& cfg) {
  for (size_t i = 0; i < p.length(); ++i)
    if (p.digit(i) == 0)
      throw std::invalid_argument(
          "is_truncatable: input contains digit 0; use the anomalous predicate");
  return truncation_chain(p, d, cfg).all_prime;
}

DigitStats digit_stats(const DigitString& p) {
  DigitStats stats{p};
  size_t run_start = 0, run_len = 0;
  size_t best_start = 0, best_len = 0;
  for (size_t i = 0; i < p.length(); ++i) {
    const int d = p.digit(i);
    ++stats.per_digit_counts[d];
    if (d % 2 == 0) {
      ++stats.even_count;
      if (run_len == 0) run_start = i;
      ++run_len;
      if (run_len > best_len) {
        best_len = run_len;
        best_start = run_start;
      }
    } else {
      ++stats.odd_count;
      run_len = 0;
    }
  }
  if (best_len > 0) {
    stats.longest_even_run =
        DigitString(std::string_view(p.str()).substr(best_start, best_len));
    stats.longest_even_run_length = best_len;
  }
  return stats;
}

std::vector<std::pair<size_t, DigitString>> prime_prefixes(const DigitString& p,
                                                           const PrimalityConfig& cfg) {
  std::vector<std::pair<size_t, DigitString>> out;
  std::optional<DigitString> cur = truncate_right(p);
  while (cur) {
    if (is_prime(*cur, cfg).not_composite()) out.emplace_back(cur->length(), *cur);
    cur = truncate_right(*cur);
  }
  return out;
}

}  // namespace chiral
