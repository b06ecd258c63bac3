#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "chiral/analysis.hpp"
#include "chiral/anomalous.hpp"
#include "chiral/enumerator.hpp"
#include "chiral/primality.hpp"

namespace chiral {

// ordered_json keeps insertion order, so identical content serializes to
// identical bytes. All prime values are emitted as decimal strings, never as
// JSON numbers.
using json = nlohmann::ordered_json;

json to_json(const PrimalityVerdict& v);
json to_json(const Generation& g);
json to_json(const TerminationReport& t);
json to_json(const ChainReport& r);
json to_json(const DigitStats& s);

json enumeration_json(const EnumerationResult& r, Direction d);

// One JSON line per finding: blocks, gaps, digits, value, verdict and
// (when evaluated) the anomalous-chain flag.
json finding_json(const GappedNumber& g, const PrimalityVerdict& v,
                  std::optional<bool> anomalous_chain = std::nullopt);

// Cache header hash over (seed set, blocks, algorithm version); a mismatch
// invalidates the file.
std::string enumeration_cache_hash(Direction d);
void save_enumeration_cache(const std::filesystem::path& path, const EnumerationResult& r,
                            Direction d);
std::optional<EnumerationResult> load_enumeration_cache(const std::filesystem::path& path,
                                                        Direction d);

}  // namespace chiral
