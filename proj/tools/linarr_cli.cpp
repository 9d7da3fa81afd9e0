// Command line front-end: analyze | curve | simulate | verify.
//
// Exit codes: 0 success, 1 fatal input error, 2 configuration error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linarr/analysis.hpp"
#include "linarr/predictors.hpp"
#include "linarr/treebank.hpp"
#include "linarr/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace linarr;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitConfigError = 2;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "auto";  // conllu | edgelist | auto (by extension)
  int exhaustive_max_n = 10;
  long long samples = 1'000'000;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  std::string out = "-";
  std::string emit = "csv";
  bool skip_bad = false;
  bool drop_punct = false;
};

struct LoadedSentence {
  std::string id;
  Tree tree;
  LinearArrangement attested;
};

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string detect_format(const RunConfig& config, const std::string& path) {
  if (config.format != "auto") return config.format;
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".conllu" || ext == ".conll") return "conllu";
  if (ext == ".edges" || ext == ".edgelist") return "edgelist";
  throw Error("cannot infer the format of '" + path +
              "'; pass --format conllu or --format edgelist");
}

// Returns false (instead of throwing) when a bad input was skipped.
bool load_inputs(const RunConfig& config, std::vector<LoadedSentence>& out) {
  bool all_good = true;
  const auto report = [&](const std::string& what) {
    std::cerr << "linarr: " << what << "\n";
    all_good = false;
  };
  for (const std::string& path : config.inputs) {
    const std::string format = detect_format(config, path);
    std::ifstream in(path);
    if (!in) {
      report("cannot read '" + path + "'");
      continue;
    }
    if (format == "conllu") {
      const ConlluParseResult parsed = parse_conllu(in, path);
      for (const Diagnostic& d : parsed.diagnostics) {
        report(d.file + ":" + std::to_string(d.line) + ": sentence '" +
               d.sentence_id + "': " + to_string(d.code) + ": " + d.message);
      }
      for (const SentenceRecord& record : parsed.sentences) {
        try {
          const SentenceRecord effective =
              config.drop_punct ? drop_punct(record) : record;
          if (effective.tokens.empty()) {
            report("sentence '" + record.id + "' is empty after --drop-punct");
            continue;
          }
          SentenceTree st = to_tree(effective);
          out.push_back(LoadedSentence{st.id, std::move(st.tree),
                                       std::move(st.attested)});
        } catch (const Error& e) {
          report("sentence '" + record.id + "': " + e.what());
        }
      }
    } else {
      try {
        EdgeListResult parsed = parse_edge_list(in);
        out.push_back(LoadedSentence{std::filesystem::path(path).stem().string(),
                                     std::move(parsed.tree),
                                     std::move(parsed.attested)});
      } catch (const Error& e) {
        report(path + ": " + std::string(e.what()));
      }
    }
  }
  return all_good;
}

std::vector<SentenceAnalysis> analyze_all(const std::vector<LoadedSentence>& sentences,
                                          const RunConfig& config) {
  AnalysisOptions options;
  options.sweep_max_n = config.exhaustive_max_n;
  options.samples = config.samples;
  options.seed = config.seed;
  options.alpha = config.alpha;
  // one sentence: let the sweep itself parallelize; many: parallelize over
  // sentences instead (results depend only on (seed, stream), not threads)
  options.threads = sentences.size() > 1 ? 1 : 0;

  std::vector<SentenceAnalysis> rows(sentences.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const size_t workers = std::min<size_t>(hw, sentences.size());
  std::vector<std::future<void>> futures;
  for (size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      for (size_t i = w; i < sentences.size(); i += workers) {
        rows[i] = analyze_sentence(sentences[i].id, sentences[i].tree,
                                   sentences[i].attested, options,
                                   static_cast<std::uint64_t>(i));
      }
    }));
  }
  for (auto& f : futures) f.get();
  return rows;
}

json rational_json(const Rational& r) { return json(to_double(r)); }

template <typename T>
json opt_json(const std::optional<T>& v) {
  if (!v.has_value()) return json(nullptr);
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_json(*v);
  } else {
    return json(*v);
  }
}

json meta_json(const RunConfig& config, const std::string& command) {
  json meta;
  meta["tool"] = "linarr";
  meta["version"] = kVersion;
  meta["command"] = command;
  meta["rng"] = kRngName;
  meta["seed"] = config.seed;
  meta["alpha"] = config.alpha;
  meta["samples"] = config.samples;
  return meta;
}

json row_json(const SentenceAnalysis& sa) {
  json row;
  row["sentence_id"] = sa.id;
  row["n"] = sa.n;
  row["mean_k2"] = rational_json(sa.mean_k2);
  row["C"] = sa.c;
  row["D"] = sa.d;
  row["C_max"] = sa.c_max;
  row["D_min"] = opt_json(sa.d_min);
  row["D_max"] = opt_json(sa.d_max);
  row["E0_C"] = rational_json(sa.e0_c);
  row["E0_D"] = rational_json(sa.e0_d);
  row["eps0"] = rational_json(sa.eps0);
  row["E1_C"] = rational_json(sa.e1_c);
  row["eps1"] = rational_json(sa.eps1);
  row["B1"] = sa.b1;
  row["B2"] = sa.b2;
  row["E_C_given_D"] = opt_json(sa.e_c_given_d);
  row["E_C_given_D_se"] = opt_json(sa.e_c_given_d_se);
  row["eps_cond"] = opt_json(sa.eps_cond);
  row["pL_C"] = sa.p_c ? rational_json(sa.p_c->left_p) : json(nullptr);
  row["pR_C"] = sa.p_c ? rational_json(sa.p_c->right_p) : json(nullptr);
  row["pL_dev"] = sa.p_dev ? rational_json(sa.p_dev->left_p) : json(nullptr);
  row["pR_dev"] = sa.p_dev ? rational_json(sa.p_dev->right_p) : json(nullptr);
  row["R"] = sa.r;
  row["method"] = to_string(sa.method);
  row["seed"] = sa.seed_used;

  json exact;
  exact["mean_k2"] = to_string(sa.mean_k2);
  exact["E0_C"] = to_string(sa.e0_c);
  exact["E0_D"] = to_string(sa.e0_d);
  exact["E1_C"] = to_string(sa.e1_c);
  exact["eps0"] = to_string(sa.eps0);
  exact["eps1"] = to_string(sa.eps1);
  if (sa.e_c_given_d) exact["E_C_given_D"] = to_string(*sa.e_c_given_d);
  if (sa.eps_cond) exact["eps_cond"] = to_string(*sa.eps_cond);
  if (sa.p_c) {
    exact["pL_C"] = to_string(sa.p_c->left_p);
    exact["pR_C"] = to_string(sa.p_c->right_p);
  }
  if (sa.p_dev) {
    exact["pL_dev"] = to_string(sa.p_dev->left_p);
    exact["pR_dev"] = to_string(sa.p_dev->right_p);
  }
  row["exact"] = exact;
  return row;
}

OutputMeta output_meta(const RunConfig& config, const std::string& command) {
  OutputMeta meta;
  meta.command = command;
  meta.seed = config.seed;
  meta.alpha = config.alpha;
  meta.samples = config.samples;
  return meta;
}

int cmd_analyze(const RunConfig& config) {
  std::vector<LoadedSentence> sentences;
  const bool clean = load_inputs(config, sentences);
  if (!clean && !config.skip_bad) return kExitInputError;

  const std::vector<SentenceAnalysis> rows = analyze_all(sentences, config);

  // feasibility of the significance level against the conditioning sets
  std::vector<long long> r_values;
  for (const SentenceAnalysis& sa : rows) {
    if (sa.r >= 1) r_values.push_back(sa.r);
  }
  std::optional<SignificanceFeasibility> feasibility;
  if (!r_values.empty()) {
    feasibility = min_significance(r_values, config.alpha);
  }

  OutputSink sink(config.out);
  if (config.emit == "json") {
    json doc;
    doc["meta"] = meta_json(config, "analyze");
    if (feasibility) {
      doc["meta"]["R_min"] = feasibility->r_min;
      doc["meta"]["min_attainable_p"] = to_double(feasibility->min_p);
      doc["meta"]["alpha_admissible"] = feasibility->admissible;
    }
    json list = json::array();
    for (const SentenceAnalysis& sa : rows) list.push_back(row_json(sa));
    doc["sentences"] = list;
    sink.stream() << doc.dump(2) << "\n";
  } else {
    OutputMeta meta = output_meta(config, "analyze");
    if (feasibility) {
      meta.notes.push_back(
          "min attainable p: 1/" + std::to_string(feasibility->r_min) +
          " = " + format_full(to_double(feasibility->min_p)) + "; alpha " +
          format_full(config.alpha) +
          (feasibility->admissible ? " admissible" : " NOT admissible"));
    }
    write_csv(sink.stream(), rows, meta);
  }
  return kExitOk;
}

int cmd_curve(const RunConfig& config, const std::string& selector) {
  std::vector<LoadedSentence> sentences;
  const bool clean = load_inputs(config, sentences);
  if (!clean && !config.skip_bad) return kExitInputError;
  if (sentences.empty()) {
    std::cerr << "linarr: no sentence to profile\n";
    return kExitInputError;
  }

  size_t index = 0;
  if (!selector.empty()) {
    bool found = false;
    for (size_t i = 0; i < sentences.size(); ++i) {
      if (sentences[i].id == selector) {
        index = i;
        found = true;
        break;
      }
    }
    if (!found) {
      try {
        const long parsed = std::stol(selector);
        if (parsed >= 1 && static_cast<size_t>(parsed) <= sentences.size()) {
          index = static_cast<size_t>(parsed) - 1;
          found = true;
        }
      } catch (const std::exception&) {
      }
    }
    if (!found) {
      std::cerr << "linarr: no sentence matches '" << selector << "'\n";
      return kExitInputError;
    }
  }

  const LoadedSentence& chosen = sentences[index];
  const int n = chosen.tree.vertex_count();
  PermutationEnsembleResult ens =
      n <= config.exhaustive_max_n
          ? exhaustive_ensemble(chosen.tree, config.exhaustive_max_n)
          : monte_carlo_ensemble(chosen.tree, config.samples, config.seed,
                                 static_cast<std::uint64_t>(index));
  const CrossingsVsLengthCurve curve = c_vs_d_curve(ens);

  OutputSink sink(config.out);
  if (config.emit == "json") {
    json doc;
    doc["meta"] = meta_json(config, "curve");
    doc["meta"]["method"] = to_string(ens.method);
    doc["sentence_id"] = chosen.id;
    doc["E0_C"] = rational_json(curve.e0_c);
    doc["E0_D"] = rational_json(curve.e0_d);
    json points = json::array();
    for (const CurvePoint& p : curve.points) {
      json point;
      point["D"] = p.d;
      point["R"] = p.r;
      point["mean_C"] = rational_json(p.mean_c);
      point["mean_E1C"] = rational_json(p.mean_e1c);
      points.push_back(point);
    }
    doc["points"] = points;
    sink.stream() << doc.dump(2) << "\n";
  } else {
    OutputMeta meta = output_meta(config, "curve");
    std::ostream& out = sink.stream();
    out << "# sentence: " << chosen.id << "\n";
    out << "# method: " << to_string(ens.method) << "\n";
    write_curve_csv(out, curve, meta);
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, int n_min, int n_max,
                 long long trials) {
  OutputSink sink(config.out);
  std::ostream& out = sink.stream();

  struct SimRow {
    int n;
    std::optional<Rational> linear, quasi, random;
    bool clipped = false;
    std::optional<double> sampled_mean, sampled_se;
  };
  std::vector<SimRow> rows;
  bool any_clipped = false;
  for (int n = n_min; n <= n_max; ++n) {
    SimRow row;
    row.n = n;
    const auto clip = [&](Rational v) {
      if (v < Rational(0)) {
        row.clipped = true;
        any_clipped = true;
        return Rational(0);
      }
      return v;
    };
    if (n >= 2) row.linear = clip(e0_crossings_linear(n));
    if (n >= 3) row.quasi = clip(e0_crossings_quasi(n));
    row.random = clip(expected_e0_random_labeled(n));
    if (trials > 0) {
      SplitMix64 rng =
          SplitMix64::stream(config.seed, static_cast<std::uint64_t>(n));
      double sum = 0, sum_sq = 0;
      for (long long s = 0; s < trials; ++s) {
        const Tree t = random_labeled_tree(n, rng);
        const double e0 =
            to_double(e0_crossings(n, degree_profile(t).mean_k2));
        sum += e0;
        sum_sq += e0 * e0;
      }
      const double mean = sum / static_cast<double>(trials);
      row.sampled_mean = mean;
      if (trials >= 2) {
        const double var = (sum_sq - static_cast<double>(trials) * mean * mean) /
                           static_cast<double>(trials - 1);
        row.sampled_se = std::sqrt(std::max(0.0, var) /
                                   static_cast<double>(trials));
      }
    }
    rows.push_back(row);
  }

  if (config.emit == "json") {
    json doc;
    doc["meta"] = meta_json(config, "simulate");
    doc["meta"]["trials"] = trials;
    json list = json::array();
    for (const SimRow& row : rows) {
      json r;
      r["n"] = row.n;
      r["E0_linear"] = opt_json(row.linear);
      r["E0_quasi"] = opt_json(row.quasi);
      r["E_E0_random"] = opt_json(row.random);
      r["sampled_mean"] = opt_json(row.sampled_mean);
      r["sampled_se"] = opt_json(row.sampled_se);
      r["clipped"] = row.clipped;
      list.push_back(r);
    }
    doc["rows"] = list;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  OutputMeta meta = output_meta(config, "simulate");
  meta.samples = trials;
  out << "# linarr " << kVersion << "\n";
  out << "# command: simulate\n";
  out << "# rng: " << kRngName << "\n";
  out << "# seed: " << config.seed << "\n";
  out << "# trials: " << trials << "\n";
  out << "# method: closed forms exact; sampled columns monte_carlo\n";
  if (any_clipped) {
    out << "# note: negative closed-form values clipped to 0\n";
  }
  out << "n,E0_linear,E0_quasi,E_E0_random,sampled_mean,sampled_se\n";
  for (const SimRow& row : rows) {
    out << row.n << ',';
    out << (row.linear ? format_full(*row.linear) : "") << ',';
    out << (row.quasi ? format_full(*row.quasi) : "") << ',';
    out << (row.random ? format_full(*row.random) : "") << ',';
    out << (row.sampled_mean ? format_full(*row.sampled_mean) : "") << ',';
    out << (row.sampled_se ? format_full(*row.sampled_se) : "") << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config) {
  OutputSink sink(config.out);
  std::ostream& out = sink.stream();
  bool all_pass = true;
  const auto report = [&](const std::string& name, bool pass,
                          const std::string& detail = "") {
    out << (pass ? "pass" : "FAIL") << "  " << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    if (!pass) all_pass = false;
  };

  {
    bool ok = true;
    long long checked = 0;
    for (int n = 3; n <= 8 && ok; ++n) {
      enumerate_labeled_trees(n, [&](const Tree& t) {
        for (Vertex v = 1; v <= n; ++v) {
          if (t.degree(v) != 1) continue;
          const LeafReduction r = reduce_leaf(t, v);
          ++checked;
          if (t.k2() != r.reduced.k2() + 2 * r.attachment_degree) ok = false;
        }
      });
    }
    report("k2 leaf-reduction identity, every leaf of every tree up to n=8", ok,
           std::to_string(checked) + " reductions");
  }
  {
    bool ok = true;
    long long trees = 0;
    for (int n = 3; n <= 8 && ok; ++n) {
      enumerate_labeled_trees(n, [&](const Tree& t) {
        ++trees;
        if (t.k2() > k2_quasi(n) && classify(t) != TreeClass::Star) ok = false;
      });
    }
    report("k2 above the quasi-star level forces a star, n=3..8", ok,
           std::to_string(trees) + " trees");
  }
  {
    bool ok = k2_quasi(3) == k2_star(3);
    for (int n = 4; n <= 50; ++n) {
      if (k2_quasi(n) >= k2_star(n)) ok = false;
    }
    report("quasi-star k2 sits strictly below the star k2 for n>3", ok);
  }
  {
    bool ok = true;
    for (int n = 4; n <= 50; ++n) {
      Rational sum(0);
      for (int d = 1; d <= n - 1; ++d) {
        sum += p_cross_given_d(n, d) * p_length(n, d);
      }
      if (sum != Rational(1, 3)) ok = false;
    }
    report("length-weighted crossing probability equals 1/3, n=4..50", ok);
  }
  {
    bool ok = true;
    for (int n = 4; n <= 50; ++n) {
      const Rational peak = p_cross_max(n);
      const Rational center = p_cross_given_d(n, n / 2);
      if (p_cross_given_d(n, (n + 1) / 2) != center) ok = false;
      for (int d = 1; d <= n - 1; ++d) {
        const Rational p = p_cross_given_d(n, d);
        if (p != p_cross_given_d(n, n - d)) ok = false;
        if (p > peak || p > center) ok = false;
        const bool should_peak = n % 2 == 0 && d == n / 2;
        if (should_peak != (p == peak)) ok = false;
      }
      if (p_cross_given_d(n, 1) != Rational(0)) ok = false;
      if (p_cross_given_d(n, n - 1) != Rational(0)) ok = false;
    }
    report("crossing probability symmetry, zeros and central peak, n=4..50",
           ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 50; ++n) {
      Rational sum(0);
      for (int d = 1; d <= n - 1; ++d) sum += p_length(n, d);
      if (sum != Rational(1)) ok = false;
    }
    report("edge length distribution normalizes, n=2..50", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 7 && ok; ++n) {
      enumerate_labeled_trees(n, [&](const Tree& t) {
        const auto e1 = e1_crossings(t, LinearArrangement::identity(n));
        if (Rational(e1.b1) != Rational(6) * Rational(n - 1) *
                                   e0_crossings(n, degree_profile(t).mean_k2)) {
          ok = false;
        }
      });
    }
    report("degree term equals six times the baseline expectation, n<=7", ok);
  }

  out << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing and dependency-length statistics of dependency "
               "trees in linear arrangements"};
  app.set_version_flag("--version", std::string("linarr ") + kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string curve_selector;
  int n_min = 4;
  int n_max = 50;
  long long trials = 10000;

  const auto add_common = [&](CLI::App* cmd, bool wants_inputs) {
    if (wants_inputs) {
      cmd->add_option("inputs", config.inputs, "input files")->required();
      cmd->add_option("--format", config.format,
                      "input format: conllu | edgelist | auto")
          ->check(CLI::IsMember({"auto", "conllu", "edgelist"}));
      cmd->add_flag("--skip-bad", config.skip_bad,
                    "skip unparseable sentences instead of failing");
      cmd->add_flag("--drop-punct", config.drop_punct,
                    "drop tokens with deprel 'punct' (conllu only)");
    }
    cmd->add_option("--max-exhaustive-n", config.exhaustive_max_n,
                    "largest n handled by exhaustive permutation sweeps")
        ->check(CLI::Range(4, 12));
    cmd->add_option("--samples", config.samples,
                    "Monte Carlo samples beyond the exhaustive bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--alpha", config.alpha, "significance level")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--out", config.out, "output path ('-' for stdout)");
    cmd->add_option("--emit", config.emit, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "per-sentence crossing statistics table");
  add_common(analyze, true);

  CLI::App* curve = app.add_subcommand(
      "curve", "conditional crossings per total dependency length");
  add_common(curve, true);
  curve->add_option("--sentence", curve_selector,
                    "sentence id or 1-based index (default: first)");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "closed-form and sampled crossing expectations per n");
  add_common(simulate, false);
  simulate->add_option("--n-min", n_min, "smallest n")->check(CLI::Range(2, 500));
  simulate->add_option("--n-max", n_max, "largest n")->check(CLI::Range(2, 500));
  simulate->add_option("--trials", trials,
                       "random trees sampled per n (0 disables sampling)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the exhaustive identity and proposition checks");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  if (n_min > n_max) {
    std::cerr << "linarr: --n-min must not exceed --n-max\n";
    return kExitConfigError;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(config);
    if (app.got_subcommand(curve)) return cmd_curve(config, curve_selector);
    if (app.got_subcommand(simulate))
      return cmd_simulate(config, n_min, n_max, trials);
    if (app.got_subcommand(verify)) return cmd_verify(config);
  } catch (const Error& e) {
    std::cerr << "linarr: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "linarr: internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitConfigError;
}
