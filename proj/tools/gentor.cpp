#include "gentor/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

#ifndef GENTOR_DATA_DIR
#define GENTOR_DATA_DIR "data"
#endif

int emit(const gentor::ResultEnvelope& env) {
  std::cout << env.render(env.config.format);
  return env.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized torsion toolkit for 0-surgeries on double twist knots"};
  app.require_subcommand(1);
  app.fallthrough();

  gentor::ConfigOverrides overrides;
  app.add_option("--max-degree", overrides.max_degree,
                 "largest symmetric-group degree n to search (points 0..n)");
  app.add_option("--mode", overrides.mode,
                 "search mode: pruned | exhaustive | both");
  app.add_option("--threads", overrides.threads, "worker threads for the search");
  app.add_option("--cache-dir", overrides.cache_dir,
                 "witness cache directory (empty disables caching)");
  app.add_option("--format", overrides.format, "output format: json | csv | text");
  app.add_option("--k-cap", overrides.k_cap,
                 "upper bound for the certificate exponent search");

  long long p = 0, q = 0, p2 = 0, q2 = 0;
  std::string word_text;
  std::string table_path = std::string(GENTOR_DATA_DIR) + "/table1.json";

  auto* search = app.add_subcommand(
      "search", "search symmetric-group witnesses for [xy,yx]");
  search->add_option("p", p)->required();
  search->add_option("q", q)->required();

  auto* verify = app.add_subcommand(
      "verify-table", "verify every filled row of the shipped witness table");
  verify->add_option("table", table_path, "path to the table JSON");

  auto* certify = app.add_subcommand(
      "certify", "exact torsion certificate for K_{p,-q} (enter positive p q)");
  certify->add_option("p", p)->required();
  certify->add_option("q", q)->required();

  auto* biorder = app.add_subcommand(
      "biorder", "evaluate the explicit bi-order on a word over {a,b,t}");
  biorder->add_option("p", p)->required();
  biorder->add_option("q", q)->required();
  biorder->add_option("word", word_text)->required();

  auto* classify = app.add_subcommand(
      "classify", "surgery invariants; with four parameters, decide homeomorphism");
  classify->add_option("p", p)->required();
  classify->add_option("q", q)->required();
  auto* p2_opt = classify->add_option("p2", p2);
  classify->add_option("q2", q2)->needs(p2_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gentor::kExitUsageError;
  }

  gentor::RunConfig config;
  try {
    config = gentor::resolve_config(overrides);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return gentor::kExitUsageError;
  }

  if (search->parsed()) return emit(gentor::cmd_search(p, q, config));
  if (verify->parsed()) return emit(gentor::cmd_verify_table(table_path, config));
  if (certify->parsed()) return emit(gentor::cmd_certify(p, q, config));
  if (biorder->parsed()) return emit(gentor::cmd_biorder(p, q, word_text, config));
  if (classify->parsed()) {
    if (classify->count("p2") != 0 && classify->count("q2") == 0) {
      std::cerr << "classify needs either two or four parameters\n";
      return gentor::kExitUsageError;
    }
    if (classify->count("p2") != 0)
      return emit(gentor::cmd_classify_pair(p, q, p2, q2, config));
    return emit(gentor::cmd_classify(p, q, config));
  }
  return gentor::kExitUsageError;
}
