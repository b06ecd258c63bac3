// Command-line front end: enumeration, figure data, chains, digit stats,
// verification, gap search and band search over chiral prime concatenations.
//
// Exit codes: 0 success; 1 a verification found a composite or a failed
// predicate; 2 usage error; 3 cache write failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chiral/analysis.hpp"
#include "chiral/anomalous.hpp"
#include "chiral/digits.hpp"
#include "chiral/enumerator.hpp"
#include "chiral/parallel.hpp"
#include "chiral/primality.hpp"
#include "chiral/serialize.hpp"

namespace {

using namespace chiral;

struct RunConfig {
  std::string direction;
  std::string format = "text";
  std::string number;
  std::string cache_path;
  std::vector<std::string> block_args;
  std::vector<uint32_t> gap_args;
  std::string prefix, suffix;
  uint64_t seed = 1;
  int rounds = 40;
  int threads = default_thread_count();
  int max_gen = 0;
  uint32_t max_gap = 100;
  int bands = 2;
  int min_block_len = 2;
  int max_block_len = 24;
  uint64_t budget = 1'000'000;
  bool check_anomalous_chain = false;
};

PrimalityConfig primality_config(const RunConfig& cfg) { return {cfg.seed, cfg.rounds}; }

// Numbers on the command line are decimal strings of unlimited length; the
// compact gap form "1(0^41)3" expands wherever a number is accepted.
DigitString parse_number_arg(const std::string& text) {
  return GappedNumber::parse(text).render();
}

std::optional<std::filesystem::path> cache_file(const RunConfig& cfg, Direction d) {
  if (!cfg.cache_path.empty()) return std::filesystem::path(cfg.cache_path);
  if (const char* dir = std::getenv("CHIRAL_CACHE_DIR"); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / (std::string("enum_") + std::string(to_string(d)) + ".json");
  return std::nullopt;
}

// Full enumeration, through the cache when one is configured. Only complete
// runs (termination reached) are written back.
EnumerationResult full_enumeration(const RunConfig& cfg, Direction d) {
  const auto path = cache_file(cfg, d);
  if (path) {
    if (auto cached = load_enumeration_cache(*path, d); cached && cached->termination)
      return std::move(*cached);
  }
  EnumerationResult result = enumerate_all(d, cfg.threads);
  if (path) {
    try {
      save_enumeration_cache(*path, result, d);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(3);
    }
  }
  return result;
}

std::string verdict_text(const PrimalityVerdict& v) {
  std::ostringstream out;
  out << to_string(v.kind);
  if (v.divisor) out << " (divisor " << v.divisor->get_str() << ")";
  if (v.witness) out << " (witness " << v.witness->get_str() << ")";
  if (!v.note.empty()) out << " [" << v.note << "]";
  if (v.kind == VerdictKind::ProbablePrime)
    out << " (" << v.rounds << " rounds + strong Lucas, seed " << v.seed << ")";
  return out.str();
}

int cmd_enumerate(const RunConfig& cfg) {
  const Direction d = direction_from_string(cfg.direction);
  EnumerationResult result;
  if (cfg.max_gen > 0) {
    result = enumerate_all(d, cfg.threads, cfg.max_gen);
  } else {
    result = full_enumeration(cfg, d);
  }

  if (cfg.format == "json") {
    std::cout << enumeration_json(result, d).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "generation,prime\n";
    for (const Generation& g : result.generations)
      for (const DigitString& m : g.members) std::cout << g.index << "," << m.str() << "\n";
  } else {
    for (const Generation& g : result.generations) {
      std::cout << "generation " << g.index << " (" << g.members.size() << "):";
      for (const DigitString& m : g.members) std::cout << " " << m.str();
      std::cout << "\n";
    }
    if (result.termination) {
      const TerminationReport& t = *result.termination;
      std::cout << "last nonempty generation: " << t.last_nonempty_generation << "\n";
      std::cout << "total primes: " << t.total_count << "\n";
      std::cout << "maximal set:";
      for (const DigitString& m : t.maximal_set) std::cout << " " << m.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_figure_data(const RunConfig& cfg) {
  const Direction d = direction_from_string(cfg.direction);
  const EnumerationResult result = full_enumeration(cfg, d);

  if (cfg.format == "json") {
    json j;
    j["direction"] = std::string(to_string(d));
    json counts = json::array();
    for (const Generation& g : result.generations)
      counts.push_back(json::array({g.index, g.members.size()}));
    j["counts"] = std::move(counts);
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "generation,count\n";
    for (const Generation& g : result.generations)
      std::cout << g.index << "," << g.members.size() << "\n";
  } else {
    for (const Generation& g : result.generations)
      std::cout << g.index << " " << g.members.size() << "\n";
  }
  return 0;
}

int cmd_chain(const RunConfig& cfg) {
  const Direction d = direction_from_string(cfg.direction);
  const ChainReport report = truncation_chain(parse_number_arg(cfg.number), d,
                                              primality_config(cfg));
  if (cfg.format == "json") {
    std::cout << to_json(report).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "length,value,kind\n";
    for (size_t i = 0; i < report.chain.size(); ++i)
      std::cout << report.chain[i].length() << "," << report.chain[i].str() << ","
                << to_string(report.verdicts[i].kind) << "\n";
  } else {
    for (const DigitString& entry : report.chain) std::cout << entry.str() << "\n";
  }
  return 0;
}

int cmd_stats(const RunConfig& cfg) {
  const DigitStats stats = digit_stats(parse_number_arg(cfg.number));
  if (cfg.format == "json") {
    std::cout << to_json(stats).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "digit,count\n";
    for (int d = 0; d <= 9; ++d) std::cout << d << "," << stats.per_digit_counts[d] << "\n";
  } else {
    std::cout << "subject: " << stats.subject.str() << "\n";
    std::cout << "digits:  " << stats.subject.length() << "\n";
    for (int d = 0; d <= 9; ++d)
      if (stats.per_digit_counts[d] > 0)
        std::cout << "  " << d << " x " << stats.per_digit_counts[d] << "\n";
    std::cout << "odd digits:  " << stats.odd_count << "\n";
    std::cout << "even digits: " << stats.even_count << "\n";
    if (stats.longest_even_run)
      std::cout << "longest even run: " << stats.longest_even_run->str() << " (length "
                << stats.longest_even_run_length << ")\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  GappedNumber subject = cfg.block_args.empty()
                             ? GappedNumber::parse(cfg.number)
                             : [&] {
                                 std::vector<DigitString> blocks;
                                 for (const std::string& b : cfg.block_args)
                                   blocks.emplace_back(b);
                                 return GappedNumber(std::move(blocks), cfg.gap_args);
                               }();
  const PrimalityConfig pc = primality_config(cfg);
  const PrimalityVerdict verdict = block_concat_verify(subject, pc);

  std::optional<bool> chain_flag;
  std::optional<AnomalousChainResult> chain;
  if (cfg.check_anomalous_chain) {
    chain = is_anomalously_left_truncatable(subject, pc);
    chain_flag = chain->truncatable;
  }

  if (cfg.format == "json") {
    std::cout << finding_json(subject, verdict, chain_flag).dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "value,digits,kind,anomalous_chain\n";
    std::cout << subject.render().str() << "," << subject.digit_length() << ","
              << to_string(verdict.kind) << ","
              << (chain_flag ? (*chain_flag ? "true" : "false") : "") << "\n";
  } else {
    std::cout << subject.compact() << ": " << verdict_text(verdict) << "\n";
    if (chain)
      std::cout << "anomalously left-truncatable: " << (chain->truncatable ? "yes" : "no") << "\n";
  }
  const bool failed = !verdict.not_composite() || (chain_flag && !*chain_flag);
  return failed ? 1 : 0;
}

int cmd_gap_search(const RunConfig& cfg) {
  const DigitString prefix = parse_number_arg(cfg.prefix);
  const DigitString suffix = parse_number_arg(cfg.suffix);
  const auto hits = gap_search(prefix, suffix, cfg.max_gap, primality_config(cfg), cfg.threads);

  if (cfg.format == "json") {
    for (const GapHit& h : hits) {
      GappedNumber g({prefix, suffix}, {h.k});
      std::cout << finding_json(g, h.verdict).dump() << "\n";
    }
  } else if (cfg.format == "csv") {
    std::cout << "k,digits,kind\n";
    for (const GapHit& h : hits)
      std::cout << h.k << "," << (prefix.length() + h.k + suffix.length()) << ","
                << to_string(h.verdict.kind) << "\n";
  } else {
    for (const GapHit& h : hits) {
      GappedNumber g({prefix, suffix}, {h.k});
      std::cout << "k=" << h.k << "  " << g.compact() << "  " << verdict_text(h.verdict) << "\n";
    }
    std::cout << hits.size() << " gap(s) found for k in 1.." << cfg.max_gap << "\n";
  }
  return 0;
}

int cmd_band_search(const RunConfig& cfg) {
  if (cfg.max_block_len < cfg.min_block_len)
    throw std::invalid_argument("band-search: --max-block-len below --min-block-len");
  const EnumerationResult left = full_enumeration(cfg, Direction::Left);
  std::vector<Generation> pool;
  for (const Generation& g : left.generations)
    if (g.index >= cfg.min_block_len && g.index <= cfg.max_block_len) pool.push_back(g);

  const BandSearchResult result = band_search(pool, cfg.bands, cfg.min_block_len, cfg.max_gap,
                                              cfg.budget, primality_config(cfg), cfg.threads);

  if (cfg.format == "json") {
    for (const BandFinding& f : result.findings)
      std::cout << finding_json(f.number, f.verdict, f.anomalous_chain).dump() << "\n";
    json summary;
    summary["examined"] = result.examined;
    summary["findings"] = result.findings.size();
    std::cout << summary.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "index,value,digits,kind\n";
    for (const BandFinding& f : result.findings)
      std::cout << f.candidate_index << "," << f.number.render().str() << ","
                << f.number.digit_length() << "," << to_string(f.verdict.kind) << "\n";
  } else {
    for (const BandFinding& f : result.findings)
      std::cout << f.number.compact() << "  " << verdict_text(f.verdict) << "\n";
    std::cout << result.findings.size() << " finding(s) in " << result.examined
              << " candidates\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiral prime concatenations: enumeration, analysis and gapped searches"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool with_threads = true) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for random Miller-Rabin rounds")
        ->capture_default_str();
    sub->add_option("--rounds", cfg.rounds, "random Miller-Rabin rounds above the deterministic range")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (with_threads)
      sub->add_option("--threads", cfg.threads, "worker count")->check(CLI::PositiveNumber);
  };
  auto add_direction = [&cfg](CLI::App* sub) {
    sub->add_option("--direction", cfg.direction, "concatenation direction")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
  };
  auto add_cache = [&cfg](CLI::App* sub) {
    sub->add_option("--cache", cfg.cache_path,
                    "enumeration cache file (default: $CHIRAL_CACHE_DIR/enum_<direction>.json)");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate concatenated prime generations");
  add_direction(enumerate);
  add_common(enumerate);
  add_cache(enumerate);
  enumerate->add_option("--max-gen", cfg.max_gen, "stop after this many generations")
      ->check(CLI::PositiveNumber);

  CLI::App* figure = app.add_subcommand("figure-data", "per-generation prime counts");
  add_direction(figure);
  add_common(figure);
  add_cache(figure);

  CLI::App* chain = app.add_subcommand("chain", "truncation chain of a number");
  chain->add_option("number", cfg.number, "decimal or compact gapped number")->required();
  add_direction(chain);
  add_common(chain, false);

  CLI::App* stats = app.add_subcommand("stats", "digit statistics of a number");
  stats->add_option("number", cfg.number, "decimal or compact gapped number")->required();
  add_common(stats, false);

  CLI::App* verify = app.add_subcommand("verify", "primality verdict for a number or block form");
  verify->add_option("number", cfg.number, "decimal or compact gapped number");
  auto* blocks_opt =
      verify->add_option("--blocks", cfg.block_args, "block values, most significant first")
          ->delimiter(',');
  verify->add_option("--gaps", cfg.gap_args, "zero-run lengths between blocks")
      ->delimiter(',')
      ->needs(blocks_opt);
  verify->add_flag("--anomalous-chain", cfg.check_anomalous_chain,
                   "additionally require the anomalous left-truncatability predicate");
  add_common(verify, false);

  CLI::App* gap = app.add_subcommand("gap-search", "find k with prefix.0^k.suffix prime");
  gap->add_option("--prefix", cfg.prefix, "leading block")->required();
  gap->add_option("--suffix", cfg.suffix, "trailing block")->required();
  gap->add_option("--max-gap", cfg.max_gap, "largest zero-run length to test")
      ->required()
      ->check(CLI::Range(uint32_t{1}, kMaxGapSearchSpan));
  add_common(gap);

  CLI::App* band = app.add_subcommand(
      "band-search", "search multi-band gapped primes over left generations");
  band->add_option("--bands", cfg.bands, "number of blocks per candidate")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  band->add_option("--min-block-len", cfg.min_block_len, "smallest block digit length")
      ->capture_default_str();
  band->add_option("--max-block-len", cfg.max_block_len, "largest block digit length")
      ->capture_default_str();
  band->add_option("--max-gap", cfg.max_gap, "largest zero-run length per gap")
      ->check(CLI::Range(uint32_t{1}, kMaxGapSearchSpan))
      ->capture_default_str();
  band->add_option("--budget", cfg.budget, "maximum candidates to examine")
      ->capture_default_str();
  add_common(band);
  add_cache(band);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (figure->parsed()) return cmd_figure_data(cfg);
    if (chain->parsed()) return cmd_chain(cfg);
    if (stats->parsed()) return cmd_stats(cfg);
    if (verify->parsed()) {
      if (cfg.number.empty() && cfg.block_args.empty())
        throw std::invalid_argument("verify: give a number or --blocks/--gaps");
      if (!cfg.number.empty() && !cfg.block_args.empty())
        throw std::invalid_argument("verify: number and --blocks are mutually exclusive");
      return cmd_verify(cfg);
    }
    if (gap->parsed()) return cmd_gap_search(cfg);
    if (band->parsed()) return cmd_band_search(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
