#include "gentor/cli.hpp"

#include "gentor/biorder.hpp"
#include "gentor/certificates.hpp"
#include "gentor/classify.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gentor {

namespace {

std::optional<std::string> env_value(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

SearchMode parse_mode(const std::string& text) {
  if (text == "pruned") return SearchMode::Pruned;
  if (text == "exhaustive") return SearchMode::Exhaustive;
  if (text == "both") return SearchMode::Both;
  throw std::invalid_argument("unknown search mode: " + text);
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown output format: " + text);
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["max_degree"] = c.max_degree;
  j["mode"] = to_string(c.mode);
  j["threads"] = c.threads;
  j["cache_dir"] = c.cache_dir.string();
  j["format"] = to_string(c.format);
  j["k_cap"] = c.k_cap;
  return j;
}

std::string sanitize_slug(const std::string& text) {
  std::string out;
  for (char ch : text)
    out += (std::isalnum(static_cast<unsigned char>(ch)) != 0) ? ch : '-';
  return out;
}

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string ordering_text(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

}  // namespace

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Pruned: return "pruned";
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::Both: return "both";
  }
  return "pruned";
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

RunConfig resolve_config(const ConfigOverrides& flags) {
  RunConfig c;
  if (auto v = env_value("GENTOR_MAX_DEGREE")) c.max_degree = std::stoi(*v);
  if (auto v = env_value("GENTOR_MODE")) c.mode = parse_mode(*v);
  if (auto v = env_value("GENTOR_THREADS")) c.threads = std::stoi(*v);
  if (auto v = env_value("GENTOR_CACHE_DIR")) c.cache_dir = *v;
  if (auto v = env_value("GENTOR_FORMAT")) c.format = parse_format(*v);
  if (auto v = env_value("GENTOR_K_CAP")) c.k_cap = std::stoll(*v);

  if (flags.max_degree) c.max_degree = *flags.max_degree;
  if (flags.mode) c.mode = parse_mode(*flags.mode);
  if (flags.threads) c.threads = *flags.threads;
  if (flags.cache_dir) c.cache_dir = *flags.cache_dir;
  if (flags.format) c.format = parse_format(*flags.format);
  if (flags.k_cap) c.k_cap = *flags.k_cap;

  if (c.max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  if (c.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (c.k_cap < 1) throw std::invalid_argument("k_cap must be >= 1");
  return c;
}

Json ResultEnvelope::to_json() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  j["outcome"] = outcome;
  j["timing_ms"] = timing_ms;
  j["artifact_version"] = kArtifactVersion;
  j["config"] = config_to_json(config);
  return j;
}

namespace {

void flatten_json(const Json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>* out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten_json(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out->emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join_ints(const Json& arr, char sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.dump();
  }
  return out;
}

}  // namespace

std::string ResultEnvelope::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Json:
      return to_json().dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream os;
      if (command == "search" && outcome.contains("witnesses")) {
        os << "p,q,degree,found,y_images,candidate,candidate_image\n";
        for (const auto& d : outcome.at("degrees")) {
          os << params.at("p").dump() << ',' << params.at("q").dump() << ','
             << d.at("degree").dump() << ',' << d.at("found").dump() << ',';
          if (d.at("found").get<bool>()) {
            const auto& w = d.at("witness");
            os << csv_escape(join_ints(w.at("y"), ' ')) << ','
               << csv_escape(w.at("candidate").get<std::string>()) << ','
               << csv_escape(join_ints(w.at("candidate_image"), ' '));
          } else {
            os << ",,";
          }
          os << '\n';
        }
        return os.str();
      }
      if (command == "verify-table" && outcome.contains("rows")) {
        os << "p,q,status,degree\n";
        for (const auto& r : outcome.at("rows"))
          os << r.at("p").dump() << ',' << r.at("q").dump() << ','
             << r.at("status").get<std::string>() << ','
             << (r.contains("n") ? r.at("n").dump() : "") << '\n';
        return os.str();
      }
      os << "field,value\n";
      std::vector<std::pair<std::string, std::string>> flat;
      flatten_json(outcome, "", &flat);
      for (const auto& [k, v] : flat)
        os << csv_escape(k) << ',' << csv_escape(v) << '\n';
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << command << " " << params.dump() << "\n";
      std::vector<std::pair<std::string, std::string>> flat;
      flatten_json(outcome, "", &flat);
      for (const auto& [k, v] : flat) os << "  " << k << ": " << v << "\n";
      return os.str();
    }
  }
  return to_json().dump(2) + "\n";
}

std::filesystem::path WitnessCache::entry_path(
    const DoubleTwistParams& params, int degree,
    const std::string& candidate_label, const std::string& constraint) const {
  DoubleTwistParams rep = canonicalize(params.p, params.q);
  std::string class_dir =
      "p" + std::to_string(rep.p) + "_q" + std::to_string(rep.q);
  std::string file = "search_p" + std::to_string(params.p) + "_q" +
                     std::to_string(params.q) + "_n" + std::to_string(degree) +
                     "_" + sanitize_slug(candidate_label) + "_" + constraint +
                     ".v" + std::to_string(kCacheVersion) + ".json";
  return dir_ / class_dir / file;
}

std::optional<Json> WitnessCache::load(const std::filesystem::path& path) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (!doc.contains("cache_version") ||
      doc.at("cache_version").get<int>() != kCacheVersion)
    return std::nullopt;
  return doc.at("payload");
}

void WitnessCache::store(const std::filesystem::path& path,
                         const Json& payload) const {
  if (!enabled()) return;
  std::filesystem::create_directories(path.parent_path());
  Json doc;
  doc["cache_version"] = kCacheVersion;
  doc["payload"] = payload;
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

namespace {

ResultEnvelope make_envelope(std::string command, Json params,
                             const RunConfig& config) {
  ResultEnvelope env;
  env.command = std::move(command);
  env.params = std::move(params);
  env.config = config;
  return env;
}

Json search_one_degree(const DoubleTwistParams& params, int degree,
                       const CandidateElement& cand, const RunConfig& config,
                       const WitnessCache& cache) {
  auto path = cache.entry_path(params, degree, cand.label, "xcycle");
  if (auto hit = cache.load(path)) return *hit;
  SearchOptions options;
  options.threads = config.threads;
  auto rec = search_witness(params, degree, cand, options);
  Json payload;
  payload["degree"] = degree;
  payload["found"] = rec.has_value();
  if (rec)
    payload["witness"] = witness_to_json(*rec);
  else
    payload["witness"] = nullptr;
  cache.store(path, payload);
  return payload;
}

}  // namespace

ResultEnvelope cmd_search(long long p, long long q, const RunConfig& config) {
  Json params;
  params["p"] = p;
  params["q"] = q;
  ResultEnvelope env = make_envelope("search", params, config);
  Stopwatch timer;
  try {
    DoubleTwistParams dtp = make_params(p, q);
    CandidateElement cand = candidate("[xy,yx]", 0, basis::kTwoGen);
    WitnessCache cache(config.cache_dir);

    if (config.mode == SearchMode::Exhaustive && config.max_degree > 9) {
      env.outcome["verdict"] = "error";
      env.outcome["error"] =
          "exhaustive mode is limited to degree 9; reduce --max-degree";
      env.exit_code = kExitBudgetExceeded;
      env.timing_ms = timer.elapsed_ms();
      return env;
    }

    Json degrees = Json::array();
    std::optional<int> first_found;
    Json witnesses = Json::array();
    for (int degree = 1; degree <= config.max_degree; ++degree) {
      Json payload;
      if (config.mode == SearchMode::Exhaustive) {
        auto rec = search_exhaustive_oracle(dtp, degree, cand);
        payload["degree"] = degree;
        payload["found"] = rec.has_value();
        payload["witness"] = rec ? witness_to_json(*rec) : Json(nullptr);
      } else {
        payload = search_one_degree(dtp, degree, cand, config, cache);
      }
      if (config.mode == SearchMode::Both && degree <= 7) {
        auto oracle = search_exhaustive_oracle(dtp, degree, cand);
        bool found = payload.at("found").get<bool>();
        bool agrees = oracle.has_value() == found &&
                      (!found || witness_to_json(*oracle) == payload.at("witness"));
        payload["oracle_agrees"] = agrees;
      }
      if (payload.at("found").get<bool>()) {
        if (!first_found) first_found = degree;
        witnesses.push_back(payload.at("witness"));
      }
      degrees.push_back(std::move(payload));
    }

    env.outcome["verdict"] = first_found ? "witness_found" : "unknown";
    env.outcome["candidate"] = cand.label;
    env.outcome["constraint"] = "x_full_cycle";
    env.outcome["max_degree"] = config.max_degree;
    env.outcome["first_witness_degree"] =
        first_found ? Json(*first_found) : Json(nullptr);
    env.outcome["degrees"] = std::move(degrees);
    env.outcome["witnesses"] = std::move(witnesses);
  } catch (const std::invalid_argument& e) {
    env.outcome["verdict"] = "error";
    env.outcome["error"] = e.what();
    env.exit_code = kExitUsageError;
  }
  env.timing_ms = timer.elapsed_ms();
  return env;
}

ResultEnvelope cmd_verify_table(const std::filesystem::path& table_path,
                                const RunConfig& config) {
  Json params;
  params["table"] = table_path.string();
  ResultEnvelope env = make_envelope("verify-table", params, config);
  Stopwatch timer;

  Json doc;
  {
    std::ifstream in(table_path);
    if (!in) {
      env.outcome["verdict"] = "error";
      env.outcome["error"] = "cannot open table file: " + table_path.string();
      env.exit_code = kExitIoError;
      env.timing_ms = timer.elapsed_ms();
      return env;
    }
    doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
      env.outcome["verdict"] = "error";
      env.outcome["error"] = "table file is not a JSON array";
      env.exit_code = kExitIoError;
      env.timing_ms = timer.elapsed_ms();
      return env;
    }
  }

  CandidateElement cand = candidate("[xy,yx]", 0, basis::kTwoGen);
  Json rows = Json::array();
  int filled = 0, unknown = 0, failed = 0, errors = 0;
  for (const auto& item : doc) {
    Json row;
    try {
      std::vector<TableRow> one = parse_table(Json::array({item}));
      const TableRow& tr = one.front();
      row["p"] = tr.p;
      row["q"] = tr.q;
      if (tr.unknown) {
        row["status"] = "unknown";
        ++unknown;
      } else {
        row["n"] = tr.degree;
        ++filled;
        WitnessRecord rec{make_params(tr.p, tr.q), tr.degree,
                          Permutation(tr.x_images), Permutation(tr.y_images),
                          cand.label, Permutation::identity(tr.degree + 1)};
        PermAssignment asg = make_assignment(
            xy_alphabet(), {rec.x_image, rec.y_image});
        rec.candidate_image = evaluate(cand.word, asg);
        bool ok = verify_witness(rec);
        row["status"] = ok ? "pass" : "fail";
        if (!ok) ++failed;
      }
    } catch (const std::exception& e) {
      row["status"] = "error";
      row["detail"] = e.what();
      ++errors;
    }
    rows.push_back(std::move(row));
  }

  bool all_pass = failed == 0 && errors == 0;
  env.outcome["verdict"] = all_pass ? "pass" : "fail";
  env.outcome["rows_total"] = static_cast<int>(doc.size());
  env.outcome["rows_filled"] = filled;
  env.outcome["rows_unknown"] = unknown;
  env.outcome["rows_failed"] = failed;
  env.outcome["rows_malformed"] = errors;
  if (doc.empty()) env.outcome["warning"] = "table is empty; vacuous pass";
  env.outcome["rows"] = std::move(rows);
  env.exit_code = all_pass ? kExitOk : kExitVerdictFail;
  env.timing_ms = timer.elapsed_ms();
  return env;
}

ResultEnvelope cmd_certify(long long p, long long q, const RunConfig& config) {
  Json params;
  params["p"] = p;
  params["q"] = q;
  ResultEnvelope env = make_envelope("certify", params, config);
  Stopwatch timer;
  try {
    if (p < 1 || q < 1)
      throw std::invalid_argument(
          "certify takes positive p and q (the knot is K_{p,-q})");
    TorsionCertificate cert = torsion_certificate(p, q, config.k_cap);
    env.outcome["verdict"] = "certified";
    env.outcome["p"] = cert.p;
    env.outcome["q"] = cert.q;
    env.outcome["k"] = cert.k;
    env.outcome["n"] = cert.n.str();
    env.outcome["m"] = cert.m.str();
    env.outcome["certificate_word_text"] = to_text(cert.certificate);
    env.outcome["matrix_identity_verified"] = cert.matrix_identity_verified;
  } catch (const std::runtime_error& e) {
    env.outcome["verdict"] = "error";
    env.outcome["error"] = e.what();
    env.exit_code = kExitBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    env.outcome["verdict"] = "error";
    env.outcome["error"] = e.what();
    env.exit_code = kExitUsageError;
  }
  env.timing_ms = timer.elapsed_ms();
  return env;
}

ResultEnvelope cmd_biorder(long long p, long long q,
                           const std::string& word_text,
                           const RunConfig& config) {
  Json params;
  params["p"] = p;
  params["q"] = q;
  params["word"] = word_text;
  ResultEnvelope env = make_envelope("biorder", params, config);
  Stopwatch timer;
  try {
    if (p < 1 || q < 1)
      throw std::invalid_argument("biorder needs positive p and q");
    KContext ctx = make_k_context(p, q);
    Word w = parse_word(abt_lower_alphabet(), word_text);
    KElement e = phi(ctx, w);
    env.outcome["verdict"] = ordering_text(word_sign(ctx, w));
    env.outcome["level"] = e.level().str();
    env.outcome["raw"] = Json{{"s", to_text(e.raw_s())}, {"l", to_text(e.raw_l())}};
    env.outcome["coefficients"] = Json{{"v_plus", to_text(e.coeff_plus())},
                                       {"v_minus", to_text(e.coeff_minus())}};
    env.outcome["discriminant"] = ctx.discriminant.str();
  } catch (const std::invalid_argument& e) {
    env.outcome["verdict"] = "error";
    env.outcome["error"] = e.what();
    env.exit_code = kExitUsageError;
  }
  env.timing_ms = timer.elapsed_ms();
  return env;
}

namespace {

Json jsj_to_json(const JsjDescriptor& d) {
  Json j;
  switch (d.kind) {
    case JsjKind::SeifertNoTori: j["kind"] = "seifert_no_tori"; break;
    case JsjKind::OneTorus: j["kind"] = "one_torus"; break;
    case JsjKind::TwoTori: j["kind"] = "two_tori"; break;
  }
  Json pieces = Json::array();
  for (const auto& piece : d.pieces) pieces.push_back(piece.k);
  j["pieces"] = std::move(pieces);
  return j;
}

Json classify_invariants(long long p, long long q) {
  Json j;
  j["p"] = p;
  j["q"] = q;
  AlexanderPoly alex = alexander(p, q);
  j["alexander"] = alex.coefficients;
  j["jsj"] = jsj_to_json(jsj(p, q));
  DoubleTwistParams rep = canonicalize(p, q);
  j["class_representative"] = Json::array({rep.p, rep.q});
  return j;
}

}  // namespace

ResultEnvelope cmd_classify(long long p, long long q, const RunConfig& config) {
  Json params;
  params["p"] = p;
  params["q"] = q;
  ResultEnvelope env = make_envelope("classify", params, config);
  Stopwatch timer;
  try {
    env.outcome = classify_invariants(p, q);
    env.outcome["verdict"] = "classified";
  } catch (const std::invalid_argument& e) {
    env.outcome["verdict"] = "error";
    env.outcome["error"] = e.what();
    env.exit_code = kExitUsageError;
  }
  env.timing_ms = timer.elapsed_ms();
  return env;
}

ResultEnvelope cmd_classify_pair(long long p, long long q, long long p2,
                                 long long q2, const RunConfig& config) {
  Json params;
  params["p"] = p;
  params["q"] = q;
  params["p2"] = p2;
  params["q2"] = q2;
  ResultEnvelope env = make_envelope("classify", params, config);
  Stopwatch timer;
  try {
    bool homeo = zero_surgery_homeo(p, q, p2, q2);
    env.outcome["first"] = classify_invariants(p, q);
    env.outcome["second"] = classify_invariants(p2, q2);
    env.outcome["homeomorphic"] = homeo;
    switch (knot_relation(p, q, p2, q2)) {
      case KnotRelation::Isotopic: env.outcome["knot_relation"] = "isotopic"; break;
      case KnotRelation::Mirror: env.outcome["knot_relation"] = "mirror"; break;
      case KnotRelation::Neither: env.outcome["knot_relation"] = "neither"; break;
    }
    env.outcome["verdict"] = homeo ? "homeomorphic" : "not_homeomorphic";
  } catch (const std::invalid_argument& e) {
    env.outcome["verdict"] = "error";
    env.outcome["error"] = e.what();
    env.exit_code = kExitUsageError;
  }
  env.timing_ms = timer.elapsed_ms();
  return env;
}

}  // namespace gentor
