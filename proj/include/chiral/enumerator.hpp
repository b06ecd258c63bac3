#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "chiral/digits.hpp"

namespace chiral {

enum class Direction { Left, Right };

std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);  // throws on anything else

// C_D[n]: every direction-D concatenated prime with exactly `index` digits,
// strictly ascending. Members are deterministically verified (all standard
// generations stay below 25 digits).
struct Generation {
  Direction direction;
  int index = 1;
  std::vector<DigitString> members;
};

// Computational form of the finiteness propositions: the generation after
// last_nonempty_generation was expanded and came out empty.
struct TerminationReport {
  Direction direction;
  int last_nonempty_generation = 0;
  uint64_t total_count = 0;
  std::vector<std::pair<int, uint64_t>> counts_per_generation;
  std::vector<DigitString> maximal_set;
};

struct EnumerationResult {
  std::vector<Generation> generations;
  // Present only when an empty generation was reached (not cut off by max_gen).
  std::optional<TerminationReport> termination;
};

// A runaway enumeration is an implementation bug; the cap turns it into a
// diagnosable error instead of an infinite loop.
inline constexpr int kGenerationCap = 100;

Generation seed_generation(Direction d);          // {2,3,5,7} for both directions
std::vector<int> blocks(Direction d);             // Right: {1,3,7,9}; Left: {1..9}
Generation next_generation(const Generation& g, int threads = 1);

// max_gen == 0 runs until an empty generation seals the enumeration;
// max_gen > 0 truncates early, leaving `termination` unset.
EnumerationResult enumerate_all(Direction d, int threads = 1, int max_gen = 0);
std::vector<std::pair<int, uint64_t>> generation_counts(Direction d, int threads = 1);

}  // namespace chiral
