#include "chiral/enumerator.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "chiral/parallel.hpp"
#include "chiral/primality.hpp"

namespace chiral {

std::string_view to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

Direction direction_from_string(std::string_view s) {
  if (s == "left") return Direction::Left;
  if (s == "right") return Direction::Right;
  throw std::invalid_argument("direction must be 'left' or 'right', got \"" + std::string(s) + "\"");
}

Generation seed_generation(Direction d) {
  Generation g{d, 1, {}};
  for (int p : {2, 3, 5, 7}) g.members.push_back(DigitString::single(p));
  return g;
}

std::vector<int> blocks(Direction d) {
  if (d == Direction::Right) return {1, 3, 7, 9};
  return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

Generation next_generation(const Generation& g, int threads) {
  const std::vector<int> bs = blocks(g.direction);

  // Candidates in ascending numeric order: right-concatenation varies the
  // trailing digit fastest, left-concatenation the member. The kept subset
  // is then already sorted, so the parallel merge is a plain ordered filter.
  std::vector<DigitString> candidates;
  candidates.reserve(g.members.size() * bs.size());
  if (g.direction == Direction::Right) {
    for (const DigitString& m : g.members)
      for (int d : bs) candidates.push_back(concat_right(m, d));
  } else {
    for (int d : bs)
      for (const DigitString& m : g.members) candidates.push_back(concat_left(d, m));
  }

  std::vector<uint8_t> keep(candidates.size(), 0);
  parallel_for(candidates.size(), threads, [&](uint64_t i) {
    keep[i] = is_prime(candidates[i]).kind == VerdictKind::Prime;
  });

  Generation next{g.direction, g.index + 1, {}};
  for (size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) next.members.push_back(std::move(candidates[i]));
  assert(std::is_sorted(next.members.begin(), next.members.end()));
  return next;
}

EnumerationResult enumerate_all(Direction d, int threads, int max_gen) {
  if (max_gen < 0) throw std::invalid_argument("enumerate_all: max_gen must be >= 0");
  EnumerationResult result;
  result.generations.push_back(seed_generation(d));
  bool terminated = false;
  for (;;) {
    if (max_gen > 0 && result.generations.size() >= static_cast<size_t>(max_gen)) break;
    if (result.generations.size() >= static_cast<size_t>(kGenerationCap))
      throw std::runtime_error("enumeration exceeded the generation cap of " +
                               std::to_string(kGenerationCap) + "; expansion is not terminating");
    Generation next = next_generation(result.generations.back(), threads);
    if (next.members.empty()) {
      terminated = true;
      break;
    }
    result.generations.push_back(std::move(next));
  }
  if (terminated) {
    TerminationReport report;
    report.direction = d;
    report.last_nonempty_generation = result.generations.back().index;
    for (const Generation& g : result.generations) {
      report.counts_per_generation.emplace_back(g.index, g.members.size());
      report.total_count += g.members.size();
    }
    report.maximal_set = result.generations.back().members;
    result.termination = std::move(report);
  }
  return result;
}

std::vector<std::pair<int, uint64_t>> generation_counts(Direction d, int threads) {
  const EnumerationResult r = enumerate_all(d, threads);
  std::vector<std::pair<int, uint64_t>> counts;
  counts.reserve(r.generations.size());
  for (const Generation& g : r.generations) counts.emplace_back(g.index, g.members.size());
  return counts;
}

}  // namespace chiral
