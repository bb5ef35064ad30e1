#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolefock/json_io.hpp"
#include "boolefock/verify.hpp"

namespace boolefock::cli {

namespace {

using nlohmann::json;

constexpr std::int64_t kRelationsSamples = 500;
constexpr std::int64_t kClassifySamples = 50;
constexpr std::int64_t kSweepStates = 100;
constexpr Site kMatrixUnitSites = 8;

struct RunConfig {
  std::optional<std::uint64_t> seed;
  double tolerance = kCheckTolerance;
  std::optional<std::int64_t> n_samples;
  std::int64_t max_word_len = 5;
  std::int64_t max_rank = 6;
  std::string output_format = "json";
  std::string out_path;
  std::string input_path;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::uint64_t resolve_seed(const RunConfig& config) {
  if (config.seed) return *config.seed;
  const char* env = std::getenv("BOOLEFOCK_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string text = env;
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    if (text.front() == '-') throw std::invalid_argument(text);
    seed = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw ConfigError("BOOLEFOCK_SEED='" + text + "' is not a non-negative integer");
  return seed;
}

std::size_t resolve_samples(const RunConfig& config, std::int64_t fallback) {
  return static_cast<std::size_t>(config.n_samples.value_or(fallback));
}

void validate(const RunConfig& config) {
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
    throw ConfigError("--tolerance must be a positive number");
  }
  if (config.n_samples && *config.n_samples < 1) throw ConfigError("--samples must be >= 1");
  if (config.max_word_len < 1) throw ConfigError("--max-word-len must be >= 1");
  if (config.max_rank < 1) throw ConfigError("--max-rank must be >= 1");
}

CheckSettings settings_of(const RunConfig& config) {
  CheckSettings s;
  s.tolerance = config.tolerance;
  return s;
}

ClassifyOptions classify_options(const RunConfig& config, std::uint64_t seed) {
  ClassifyOptions options;
  options.max_word_len = static_cast<std::size_t>(config.max_word_len);
  options.seed = seed;
  options.settings = settings_of(config);
  return options;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void report_lines(std::ostream& os, const CheckReport& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_deviation=" << num(r.max_deviation)
     << "  samples=" << r.samples_run << '\n';
  if (!r.passed && r.witness) os << "  witness: " << r.witness->dump() << '\n';
}

// --- subcommands -----------------------------------------------------------

int cmd_relations(const RunConfig& config, std::ostream& os) {
  const std::uint64_t seed = resolve_seed(config);
  const std::size_t n = resolve_samples(config, kRelationsSamples);
  const CheckSettings settings = settings_of(config);
  const std::vector<CheckReport> reports{check_boolean_relations(n, seed, settings),
                                         check_matrix_units(kMatrixUnitSites, settings),
                                         check_embedding_homomorphism(n, seed, settings)};
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;

  if (config.output_format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    os << json{{"seed", seed}, {"passed", all}, {"reports", std::move(j)}}.dump(2) << '\n';
  } else if (config.output_format == "csv") {
    os << "name,passed,max_deviation,samples_run\n";
    for (const auto& r : reports) {
      os << r.name << ',' << flag(r.passed) << ',' << num(r.max_deviation) << ',' << r.samples_run << '\n';
    }
  } else {
    os << "relations  seed=" << seed << '\n';
    for (const auto& r : reports) report_lines(os, r);
  }
  return all ? kExitOk : kExitCheckFailed;
}

void row_csv(std::ostream& os, double gamma, std::size_t rank, const Classification& c) {
  os << num(gamma) << ',' << rank << ',' << flag(c.symmetric) << ',' << flag(c.expected) << ',' << flag(c.iid)
     << ',' << flag(c.consistent) << ',' << num(c.max_deviation) << '\n';
}

constexpr const char* kTableHeader = "gamma,rank,symmetric,expected,iid,consistent,max_deviation";

int cmd_classify(const RunConfig& config, std::ostream& os) {
  const json input = read_json_file(config.input_path);
  std::optional<BooleanState> state;
  try {
    state = input.get<BooleanState>();
  } catch (const std::exception& e) {
    throw ConfigError("invalid state in '" + config.input_path + "': " + e.what());
  }

  ClassifyOptions options = classify_options(config, resolve_seed(config));
  options.n_samples = resolve_samples(config, kClassifySamples);
  const Classification c = classify_definetti(*state, options);

  if (config.output_format == "json") {
    os << classification_to_json(c).dump(2) << '\n';
  } else if (config.output_format == "csv") {
    os << kTableHeader << '\n';
    row_csv(os, state->gamma(), state->density().rank(), c);
  } else {
    os << "symmetric:  " << flag(c.symmetric) << '\n'
       << "expected:   " << flag(c.expected) << '\n'
       << "iid:        " << flag(c.iid) << '\n'
       << "consistent: " << flag(c.consistent) << '\n';
    if (c.counterexample) {
      os << "counterexample ratio: " << num(c.counterexample->ratio) << '\n'
         << "counterexample witness: " << json(c.counterexample->witness).dump() << '\n';
    }
    for (const auto& r : c.reports) report_lines(os, r);
  }
  return c.consistent ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const RunConfig& config, std::ostream& os) {
  const std::uint64_t seed = resolve_seed(config);
  const std::size_t n = resolve_samples(config, kSweepStates);
  const auto rows = run_sweep(n, static_cast<std::size_t>(config.max_rank), classify_options(config, seed));
  bool all = true;
  for (const auto& r : rows) all = all && r.consistent;

  if (config.output_format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"gamma", r.gamma},
                   {"rank", r.rank},
                   {"symmetric", r.symmetric},
                   {"expected", r.expected},
                   {"iid", r.iid},
                   {"consistent", r.consistent},
                   {"max_deviation", r.max_deviation}});
    }
    os << json{{"seed", seed}, {"all_consistent", all}, {"rows", std::move(j)}}.dump(2) << '\n';
  } else {
    const bool csv = config.output_format == "csv";
    os << kTableHeader << '\n';
    for (const auto& r : rows) {
      os << num(r.gamma) << ',' << r.rank << ',' << flag(r.symmetric) << ',' << flag(r.expected) << ','
         << flag(r.iid) << ',' << flag(r.consistent) << ',' << num(r.max_deviation) << '\n';
    }
    if (!csv) os << (all ? "all " : "NOT all ") << rows.size() << " states consistent\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_replay(const RunConfig& config, std::ostream& os) {
  const json input = read_json_file(config.input_path);
  ReplayResult r;
  try {
    r = replay_witness(input, settings_of(config));
  } catch (const std::exception& e) {
    throw ConfigError("invalid witness in '" + config.input_path + "': " + e.what());
  }

  if (config.output_format == "json") {
    os << json{{"kind", r.kind}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"gap", r.gap}, {"reproduced", r.reproduced}}
              .dump(2)
       << '\n';
  } else if (config.output_format == "csv") {
    os << "kind,gap,reproduced\n" << r.kind << ',' << num(r.gap) << ',' << flag(r.reproduced) << '\n';
  } else {
    os << "kind:       " << r.kind << '\n'
       << "lhs:        " << r.lhs.dump() << '\n'
       << "rhs:        " << r.rhs.dump() << '\n'
       << "gap:        " << num(r.gap) << '\n'
       << "reproduced: " << flag(r.reproduced) << '\n';
  }
  return r.reproduced ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App& sub, RunConfig& config) {
  sub.add_option("--seed", config.seed, "PRNG seed (falls back to $BOOLEFOCK_SEED, then 0)");
  sub.add_option("--tolerance", config.tolerance, "pass/fail threshold")->capture_default_str();
  sub.add_option("--samples", config.n_samples, "samples per check (sweep: number of states)");
  sub.add_option("--max-word-len", config.max_word_len, "longest word in exchangeability checks")
      ->capture_default_str();
  sub.add_option("--max-rank", config.max_rank, "largest density rank in sweeps")->capture_default_str();
  sub.add_option("--format", config.output_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  sub.add_option("--out", config.out_path, "write the report to a file instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks Boolean-process identities and classifies Boolean states.", "boolefock"};
  app.require_subcommand(1);
  RunConfig config;

  auto* relations = app.add_subcommand("relations", "Boolean relations, matrix units and embeddings");
  auto* classify = app.add_subcommand("classify", "classify a BooleanState read from a JSON file");
  auto* sweep = app.add_subcommand("sweep", "classify a stratified sample of random states");
  auto* replay = app.add_subcommand("replay", "recompute both sides of a recorded witness");
  for (auto* sub : {relations, classify, sweep, replay}) add_common(*sub, config);
  classify->add_option("--state", config.input_path, "BooleanState JSON file")->required();
  replay->add_option("--witness", config.input_path, "witness or CheckReport JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    validate(config);
    std::ostringstream os;
    int code = kExitOk;
    if (*relations) code = cmd_relations(config, os);
    if (*classify) code = cmd_classify(config, os);
    if (*sweep) code = cmd_sweep(config, os);
    if (*replay) code = cmd_replay(config, os);

    if (config.out_path.empty()) {
      out << os.str();
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file || !(file << os.str())) throw ConfigError("cannot write '" + config.out_path + "'");
    }
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace boolefock::cli
