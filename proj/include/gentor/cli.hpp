#ifndef GENTOR_CLI_HPP
#define GENTOR_CLI_HPP

#include "gentor/table.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

namespace gentor {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kCacheVersion = 1;

enum class SearchMode { Pruned, Exhaustive, Both };
enum class OutputFormat { Json, Csv, Text };

/// Run configuration, resolved with precedence flag > environment > default.
/// Environment variables: GENTOR_MAX_DEGREE, GENTOR_MODE, GENTOR_THREADS,
/// GENTOR_CACHE_DIR, GENTOR_FORMAT, GENTOR_K_CAP.
struct RunConfig {
  int max_degree = 9;
  SearchMode mode = SearchMode::Pruned;
  int threads = 1;
  std::filesystem::path cache_dir;  // empty disables the cache
  OutputFormat format = OutputFormat::Json;
  long long k_cap = 10000;
};

/// Flag values as parsed from the command line; unset fields fall back to the
/// environment and then to defaults.
struct ConfigOverrides {
  std::optional<int> max_degree;
  std::optional<std::string> mode;
  std::optional<int> threads;
  std::optional<std::string> cache_dir;
  std::optional<std::string> format;
  std::optional<long long> k_cap;
};

RunConfig resolve_config(const ConfigOverrides& flags);

std::string to_string(SearchMode mode);
std::string to_string(OutputFormat format);

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFail = 1,
  kExitUsageError = 2,
  kExitBudgetExceeded = 3,
  kExitIoError = 4,
};

/// Uniform command result: fixed envelope fields around a per-command
/// outcome payload.
struct ResultEnvelope {
  std::string command;
  Json params;
  Json outcome;
  long long timing_ms = 0;
  RunConfig config;
  int exit_code = kExitOk;

  Json to_json() const;
  std::string render(OutputFormat format) const;
};

/// One JSON file per (class directory, literal parameters, degree, candidate,
/// constraint); payloads are reused byte for byte on a hit.
class WitnessCache {
 public:
  explicit WitnessCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }

  std::filesystem::path entry_path(const DoubleTwistParams& params, int degree,
                                   const std::string& candidate_label,
                                   const std::string& constraint) const;
  std::optional<Json> load(const std::filesystem::path& path) const;
  void store(const std::filesystem::path& path, const Json& payload) const;

 private:
  std::filesystem::path dir_;
};

ResultEnvelope cmd_search(long long p, long long q, const RunConfig& config);
ResultEnvelope cmd_verify_table(const std::filesystem::path& table_path,
                                const RunConfig& config);
ResultEnvelope cmd_certify(long long p, long long q, const RunConfig& config);
ResultEnvelope cmd_biorder(long long p, long long q,
                           const std::string& word_text,
                           const RunConfig& config);
ResultEnvelope cmd_classify(long long p, long long q, const RunConfig& config);
ResultEnvelope cmd_classify_pair(long long p, long long q, long long p2,
                                 long long q2, const RunConfig& config);

}  // namespace gentor

#endif  // GENTOR_CLI_HPP
