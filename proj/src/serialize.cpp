#include "chiral/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace chiral {
namespace {

constexpr int kAlgorithmVersion = 1;

std::string block_digits(Direction d) {
  std::string s;
  for (int b : blocks(d)) s += static_cast<char>('0' + b);
  return s;
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

json to_json(const PrimalityVerdict& v) {
  json j;
  j["kind"] = std::string(to_string(v.kind));
  if (v.divisor) j["divisor"] = v.divisor->get_str();
  if (v.witness) j["witness"] = v.witness->get_str();
  if (!v.note.empty()) j["note"] = v.note;
  if (v.kind == VerdictKind::ProbablePrime) {
    j["rounds"] = v.rounds;
    j["strong_lucas"] = v.strong_lucas;
    j["seed"] = v.seed;
  }
  return j;
}

json to_json(const Generation& g) {
  json j;
  j["n"] = g.index;
  json primes = json::array();
  for (const DigitString& m : g.members) primes.push_back(m.str());
  j["primes"] = std::move(primes);
  return j;
}

json to_json(const TerminationReport& t) {
  json j;
  j["direction"] = std::string(to_string(t.direction));
  j["last_nonempty_generation"] = t.last_nonempty_generation;
  j["total_count"] = t.total_count;
  json counts = json::array();
  for (auto [n, c] : t.counts_per_generation) counts.push_back(json::array({n, c}));
  j["counts_per_generation"] = std::move(counts);
  json maximal = json::array();
  for (const DigitString& m : t.maximal_set) maximal.push_back(m.str());
  j["maximal_set"] = std::move(maximal);
  return j;
}

json to_json(const ChainReport& r) {
  json j;
  j["subject"] = r.subject.str();
  j["direction"] = std::string(to_string(r.direction));
  j["all_prime"] = r.all_prime;
  json chain = json::array();
  for (size_t i = 0; i < r.chain.size(); ++i) {
    json entry;
    entry["value"] = r.chain[i].str();
    entry["verdict"] = to_json(r.verdicts[i]);
    chain.push_back(std::move(entry));
  }
  j["chain"] = std::move(chain);
  return j;
}

json to_json(const DigitStats& s) {
  json j;
  j["subject"] = s.subject.str();
  json counts;
  for (int d = 0; d <= 9; ++d) counts[std::to_string(d)] = s.per_digit_counts[d];
  j["per_digit_counts"] = std::move(counts);
  j["odd_count"] = s.odd_count;
  j["even_count"] = s.even_count;
  if (s.longest_even_run) {
    j["longest_even_run"] = s.longest_even_run->str();
    j["longest_even_run_length"] = s.longest_even_run_length;
  }
  return j;
}

json enumeration_json(const EnumerationResult& r, Direction d) {
  json j;
  j["direction"] = std::string(to_string(d));
  j["seed"] = "2,3,5,7";
  j["blocks"] = block_digits(d);
  j["algorithm_version"] = kAlgorithmVersion;
  j["hash"] = enumeration_cache_hash(d);
  json gens = json::array();
  for (const Generation& g : r.generations) gens.push_back(to_json(g));
  j["generations"] = std::move(gens);
  if (r.termination) j["termination"] = to_json(*r.termination);
  return j;
}

json finding_json(const GappedNumber& g, const PrimalityVerdict& v,
                  std::optional<bool> anomalous_chain) {
  json j;
  json blocks = json::array();
  for (const DigitString& b : g.blocks()) blocks.push_back(b.str());
  j["blocks"] = std::move(blocks);
  j["gaps"] = g.gaps();
  j["digits"] = g.digit_length();
  j["value"] = g.render().str();
  j["verdict"] = to_json(v);
  if (anomalous_chain) j["anomalous_chain"] = *anomalous_chain;
  return j;
}

std::string enumeration_cache_hash(Direction d) {
  return fnv1a_hex("seeds=2,3,5,7;blocks=" + block_digits(d) +
                   ";algorithm=" + std::to_string(kAlgorithmVersion));
}

void save_enumeration_cache(const std::filesystem::path& path, const EnumerationResult& r,
                            Direction d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path.string());
  out << enumeration_json(r, d) << "\n";
  if (!out.good()) throw std::runtime_error("cache write failed: " + path.string());
}

std::optional<EnumerationResult> load_enumeration_cache(const std::filesystem::path& path,
                                                        Direction d) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
    if (j.at("direction").get<std::string>() != to_string(d)) return std::nullopt;
    if (j.at("hash").get<std::string>() != enumeration_cache_hash(d)) return std::nullopt;
    EnumerationResult result;
    for (const json& jg : j.at("generations")) {
      Generation g{d, jg.at("n").get<int>(), {}};
      for (const json& p : jg.at("primes")) g.members.emplace_back(p.get<std::string>());
      result.generations.push_back(std::move(g));
    }
    if (j.contains("termination")) {
      const json& jt = j.at("termination");
      TerminationReport t;
      t.direction = d;
      t.last_nonempty_generation = jt.at("last_nonempty_generation").get<int>();
      t.total_count = jt.at("total_count").get<uint64_t>();
      for (const json& pair : jt.at("counts_per_generation"))
        t.counts_per_generation.emplace_back(pair.at(0).get<int>(), pair.at(1).get<uint64_t>());
      for (const json& m : jt.at("maximal_set")) t.maximal_set.emplace_back(m.get<std::string>());
      result.termination = std::move(t);
    }
    return result;
  } catch (const std::exception&) {
    return std::nullopt;  // malformed or stale cache: recompute
  }
}

}  // namespace chiral
