#include "opm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <random>
#include <utility>

#include "opm/distribution.hpp"
#include "opm/evaluator.hpp"
#include "opm/generate.hpp"
#include "opm/io.hpp"
#include "opm/ordering.hpp"
#include "opm/rng.hpp"

namespace opm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonInput {
  std::string input_path;
  std::vector<std::string> inline_records;
  std::string format = "table";
};

void add_common(CLI::App* cmd, CommonInput* in) {
  cmd->add_option("--input", in->input_path,
                  "input file, one record per line (name=v1,v2,...)");
  cmd->add_option("records", in->inline_records,
                  "inline records, same syntax as input lines");
  cmd->add_option("--format", in->format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("OPM_FORMAT");
}

std::vector<InputRecord> load_records(const CommonInput& in) {
  if (!in.input_path.empty() && !in.inline_records.empty())
    throw std::invalid_argument(
        "give either --input or inline records, not both");
  if (!in.input_path.empty()) return parse_records_file(in.input_path);
  if (in.inline_records.empty())
    throw std::invalid_argument("no input records given");
  std::vector<InputRecord> records;
  for (std::size_t i = 0; i < in.inline_records.size(); ++i)
    records.push_back(
        parse_record(in.inline_records[i], i + 1, records.size() + 1));
  return records;
}

ordered_json json_value(const Scalar& s) {
  if (s.is_exact()) return s.rational().str();
  return s.approx_value();
}

ordered_json json_values(const ValueSequence& seq) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : seq) arr.push_back(json_value(v.scalar()));
  return arr;
}

ordered_json json_probs(const std::vector<PositiveValue>& probs) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : probs) arr.push_back(json_value(p.scalar()));
  return arr;
}

std::string join_values(const ValueSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += format_table_value(seq[i].scalar());
  }
  return out;
}

std::string join_probs(const std::vector<PositiveValue>& probs) {
  std::string out;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i) out += ' ';
    out += format_table_value(probs[i].scalar());
  }
  return out;
}

void emit(const ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << '\n';
}

// ---- pmf ----------------------------------------------------------------

struct PmfOptions {
  CommonInput in;
  std::string kind;
  bool normalize = false;
};

int run_pmf(const PmfOptions& opt, std::ostream& out) {
  const auto records = load_records(opt.in);
  const bool json = opt.in.format == "json";
  ordered_json doc;
  if (json) {
    doc["command"] = "pmf";
    doc["kind"] = opt.kind;
    doc["normalize"] = opt.normalize;
    doc["records"] = ordered_json::array();
  } else {
    out << "name | " << opt.kind << " | expectation | variance\n";
  }

  for (const auto& rec : records) {
    ValueSequence working = rec.values;
    Scalar scale = Scalar::one(working.mode());
    if (opt.normalize) {
      NormalizationResult norm = geometric_normalize(rec.values);
      working = norm.normalized;
      scale = norm.scale.scalar();
    }
    Distribution dist = [&] {
      try {
        if (opt.kind == "apm") return apm(working);
        if (opt.kind == "gpm") return gpm(working);
        return opm(working);
      } catch (const std::domain_error& e) {
        throw std::domain_error("record '" + rec.name + "': " + e.what());
      }
    }();
    const Moments m = moments(dist);

    if (json) {
      ordered_json jrec;
      jrec["name"] = rec.name;
      jrec["values"] = json_values(rec.values);
      jrec["probs"] = json_probs(dist.probs());
      jrec["expectation"] = json_value(m.expectation);
      jrec["variance"] = json_value(m.variance);
      if (opt.normalize) jrec["scale"] = json_value(scale);
      doc["records"].push_back(std::move(jrec));
    } else {
      out << rec.name << " | " << join_probs(dist.probs()) << " | "
          << format_sig6(m.expectation.to_double()) << " | "
          << format_sig6(m.variance.to_double()) << '\n';
    }
  }
  if (json) emit(doc, out);
  return 0;
}

// ---- search -------------------------------------------------------------

struct SearchOptions {
  CommonInput in;
  SearchConfig config;
  std::string mode = "auto";
};

ordered_json json_search_fields(const SearchOutcome& outcome) {
  ordered_json j;
  j["best_ordering"] = json_values(outcome.best_ordering);
  j["method"] = search_method_name(outcome.method);
  j["classes_examined"] = outcome.classes_examined;
  if (outcome.seed) j["seed"] = *outcome.seed;
  return j;
}

int run_search(const SearchOptions& opt, std::ostream& out) {
  const auto records = load_records(opt.in);
  const bool json = opt.in.format == "json";
  SearchConfig config = opt.config;
  if (opt.mode == "exhaustive")
    config.mode = SearchMode::exhaustive;
  else if (opt.mode == "local")
    config.mode = SearchMode::local;
  else
    config.mode = SearchMode::automatic;

  ordered_json doc;
  if (json) {
    doc["command"] = "search";
    doc["records"] = ordered_json::array();
  }

  std::vector<SearchOutcome> outcomes;
  for (const auto& rec : records) {
    const NormalizationResult norm = geometric_normalize(rec.values);
    SearchOutcome outcome = min_variance_ordering(norm.normalized, config);
    const Moments m = moments(outcome.best_distribution);

    if (json) {
      ordered_json jrec;
      jrec["name"] = rec.name;
      jrec["values"] = json_values(rec.values);
      jrec["probs"] = json_probs(outcome.best_distribution.probs());
      jrec["expectation"] = json_value(m.expectation);
      jrec["variance"] = json_value(m.variance);
      ordered_json extra = json_search_fields(outcome);
      jrec.update(extra);
      doc["records"].push_back(std::move(jrec));
    } else {
      out << "record " << rec.name << ":\n"
          << "  best ordering: " << join_values(outcome.best_ordering) << '\n'
          << "  OPM: " << join_probs(outcome.best_distribution.probs()) << '\n'
          << "  variance: " << format_sig6(m.variance.to_double()) << '\n'
          << "  method: " << search_method_name(outcome.method) << '\n'
          << "  classes examined: " << outcome.classes_examined << '\n';
    }
    outcomes.push_back(std::move(outcome));
  }
  if (json) {
    if (outcomes.size() == 1) doc.update(json_search_fields(outcomes[0]));
    emit(doc, out);
  }
  return 0;
}

// ---- compare ------------------------------------------------------------

struct CompareOptions {
  CommonInput in;
  double tol_tie = kDefaultTolTie;
};

int run_compare(const CompareOptions& opt, std::ostream& out) {
  const auto records = load_records(opt.in);
  std::vector<std::pair<std::string, ValueSequence>> entries;
  entries.reserve(records.size());
  for (const auto& rec : records) entries.emplace_back(rec.name, rec.values);

  const ComparisonReport report = compare(entries, opt.tol_tie);
  const bool json = opt.in.format == "json";

  if (json) {
    ordered_json doc;
    doc["command"] = "compare";
    doc["records"] = ordered_json::array();
    for (const auto& ev : report.evaluations) {
      ordered_json jrec;
      jrec["name"] = ev.name;
      jrec["values"] = json_values(ev.raw);
      jrec["probs"] = json_probs(ev.distribution.probs());
      jrec["expectation"] = json_value(ev.distribution_moments.expectation);
      jrec["variance"] = json_value(ev.distribution_moments.variance);
      jrec["scale"] = json_value(ev.normalization.scale.scalar());
      doc["records"].push_back(std::move(jrec));
    }
    doc["ranking"] = report.ranking;
    doc["winner"] = report.winners;
    doc["tie"] = report.tie;
    doc["shared_multiset"] = report.shared_multiset;
    emit(doc, out);
    return 0;
  }

  out << "name | OPM | expectation | variance\n";
  for (const auto& ev : report.evaluations) {
    out << ev.name << " | " << join_probs(ev.distribution.probs()) << " | "
        << format_sig6(ev.distribution_moments.expectation.to_double())
        << " | "
        << format_sig6(ev.distribution_moments.variance.to_double()) << '\n';
  }
  if (!report.shared_multiset)
    out << "note: entries do not share one multiset; per-sequence "
           "standardization applied\n";
  if (report.tie) {
    out << "winner: tie between ";
    for (std::size_t i = 0; i < report.winners.size(); ++i)
      out << (i ? ", " : "") << report.winners[i];
    out << '\n';
  } else {
    out << "winner: " << report.winners.front() << '\n';
  }
  return 0;
}

// ---- identity -----------------------------------------------------------

struct IdentityOptions {
  std::size_t n = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string format = "table";
};

int run_identity(const IdentityOptions& opt, std::ostream& out) {
  std::mt19937_64 rng(splitmix64(opt.seed));
  std::size_t exact_zeros = 0;
  Scalar max_abs_residual = Scalar::zero(Mode::exact);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const ValueSequence seq = random_unit_product_sequence(opt.n, rng);
    const Scalar residual = verify_partition_identity(seq);
    if (residual.is_zero()) ++exact_zeros;
    const Scalar mag = abs(residual);
    if (mag > max_abs_residual) max_abs_residual = mag;
  }

  if (opt.format == "json") {
    ordered_json doc;
    doc["command"] = "identity";
    doc["records"] = ordered_json::array();
    doc["n"] = opt.n;
    doc["trials"] = opt.trials;
    doc["seed"] = opt.seed;
    doc["exact_zeros"] = exact_zeros;
    doc["max_abs_residual"] = json_value(max_abs_residual);
    emit(doc, out);
  } else {
    out << "partition identity: n=" << opt.n << " trials=" << opt.trials
        << " exact zeros " << exact_zeros << "/" << opt.trials
        << " max |residual| = " << max_abs_residual.str() << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ordered probability mass functions over positive sequences"};
  app.require_subcommand(1);

  PmfOptions pmf_opt;
  auto* pmf_cmd = app.add_subcommand(
      "pmf", "compute a distribution and its moments per record");
  add_common(pmf_cmd, &pmf_opt.in);
  pmf_cmd->add_option("--kind", pmf_opt.kind, "distribution family")
      ->required()
      ->check(CLI::IsMember({"apm", "gpm", "opm"}));
  pmf_cmd->add_flag("--normalize", pmf_opt.normalize,
                    "divide by the geometric mean first");

  SearchOptions search_opt;
  auto* search_cmd = app.add_subcommand(
      "search", "find the ordering whose OPM has minimum variance");
  add_common(search_cmd, &search_opt.in);
  search_cmd
      ->add_option("--max-exhaustive", search_opt.config.max_exhaustive,
                   "largest n enumerated exhaustively")
      ->check(CLI::PositiveNumber);
  search_cmd
      ->add_option("--restarts", search_opt.config.restarts,
                   "local search restarts")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search_opt.config.seed,
                         "seed for local search restarts");
  search_cmd->add_option("--mode", search_opt.mode, "search mode")
      ->check(CLI::IsMember({"auto", "exhaustive", "local"}));

  CompareOptions compare_opt;
  auto* compare_cmd = app.add_subcommand(
      "compare", "rank score sequences by ascending OPM variance");
  add_common(compare_cmd, &compare_opt.in);
  compare_cmd
      ->add_option("--tol-tie", compare_opt.tol_tie,
                   "tie tolerance for approx-mode variances")
      ->check(CLI::NonNegativeNumber);

  IdentityOptions identity_opt;
  auto* identity_cmd = app.add_subcommand(
      "identity", "check the cyclic partition identity on random sequences");
  identity_cmd->add_option("-n,--n", identity_opt.n, "sequence length")
      ->required()
      ->check(CLI::PositiveNumber);
  identity_cmd
      ->add_option("--trials", identity_opt.trials, "number of sequences")
      ->check(CLI::PositiveNumber);
  identity_cmd->add_option("--seed", identity_opt.seed, "generator seed");
  identity_cmd->add_option("--format", identity_opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("OPM_FORMAT");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("opm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (pmf_cmd->parsed()) return run_pmf(pmf_opt, out);
    if (search_cmd->parsed()) return run_search(search_opt, out);
    if (compare_cmd->parsed()) return run_compare(compare_opt, out);
    return run_identity(identity_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace opm::cli
