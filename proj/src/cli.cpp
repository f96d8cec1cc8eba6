#include "cliquebound/cli.hpp"

#include "cliquebound/bounds.hpp"
#include "cliquebound/errors.hpp"
#include "cliquebound/selfcheck.hpp"
#include "cliquebound/simplex.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

#ifndef CLIQUEBOUND_VERSION
#define CLIQUEBOUND_VERSION "dev"
#endif

namespace cliquebound::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string graph_hash(const Graph &g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : to_graph6(g)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::vector<fs::path> expand_inputs(const std::vector<std::string> &paths) {
  std::vector<fs::path> files;
  for (const auto &p : paths) {
    const fs::path path(p);
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto &entry : fs::directory_iterator(path)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".g6" || ext == ".el")) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  return files;
}

std::vector<LoadedGraph> load_graphs(const fs::path &file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<LoadedGraph> out;
  if (file.extension() == ".el") {
    out.push_back({file.string(), 0, parse_edge_list(text)});
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t index = 0;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back({file.string(), index++, parse_graph6(line)});
  }
  return out;
}

namespace {

WorkBudget budget_from(std::uint64_t nodes) { return nodes ? WorkBudget::nodes(nodes) : WorkBudget::unlimited(); }

json rational_pair(json &record, const std::string &key, const Rational &value) {
  record[key] = to_string(value);
  record[key + "_decimal"] = to_decimal(value);
  return record;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

struct AnalyzeOptions {
  std::vector<std::string> inputs;
  std::size_t t = 2;
  std::size_t t_max = 0;
  std::string format = "json";
  std::uint64_t budget = 0;
  std::string out;
  std::size_t jobs = 1;
};

struct GraphOutcome {
  std::string text;
  std::size_t tight = 0, strict = 0, errors = 0;
  bool budget_exceeded = false;
  bool invariant_failed = false;
};

GraphOutcome analyze_graph(const LoadedGraph &item, const AnalyzeOptions &opt) {
  GraphOutcome outcome;
  std::ostringstream text;
  const auto hash = graph_hash(item.graph);
  try {
    const auto budget = budget_from(opt.budget);
    const auto profile = vertex_clique_numbers(item.graph, budget);
    for (std::size_t t = opt.t; t <= opt.t_max; ++t) {
      const auto r = bound_report(item.graph, t, profile, budget);
      (r.is_tight ? outcome.tight : outcome.strict)++;
      if (!r.characterization_consistent || Rational(r.true_count) > r.localized_zykov)
        outcome.invariant_failed = true;
      const std::string certificate = r.extremal_certificate ? to_string(*r.extremal_certificate) : "";
      if (opt.format == "csv") {
        text << csv_field(item.file) << ',' << r.n << ',' << r.m << ',' << r.t << ',' << to_string(r.true_count)
             << ',' << to_string(r.localized_zykov) << ',' << to_string(r.zykov_classical) << ','
             << (r.is_tight ? "true" : "false") << ',' << csv_field(certificate) << '\n';
        continue;
      }
      json rec;
      rec["file"] = item.file;
      rec["index"] = item.index;
      rec["graph_hash"] = hash;
      rec["version"] = CLIQUEBOUND_VERSION;
      rec["n"] = r.n;
      rec["m"] = r.m;
      rec["t"] = r.t;
      rec["omega"] = r.omega;
      rec["N"] = to_string(r.true_count);
      rational_pair(rec, "localized_bound", r.localized_zykov);
      rational_pair(rec, "zykov_bound", r.zykov_classical);
      if (r.turan) rational_pair(rec, "turan_bound", *r.turan);
      rational_pair(rec, "edge_localized_sum", r.edge_localized_sum);
      rec["edge_localized_cap"] = to_string(ratio(to_integer(r.n * r.n), 2));
      rational_pair(rec, "vertex_localized_turan_value", r.vertex_localized_turan_value);
      rec["vertex_localized_turan"] = to_string(r.vertex_localized_turan);
      rational_pair(rec, "kirsch_nir_sum", r.kirsch_nir_sum);
      Integer cap;
      mpz_ui_pow_ui(cap.get_mpz_t(), r.n, r.t);
      rec["kirsch_nir_cap"] = to_string(cap);
      rec["kirsch_nir_equal"] = r.kirsch_nir_equal;
      rec["tight"] = r.is_tight;
      rec["degenerate"] = r.degenerate;
      rec["certificate"] = r.extremal_certificate ? json(certificate) : json(nullptr);
      rec["characterization_consistent"] = r.characterization_consistent;
      text << rec.dump() << '\n';
    }
  } catch (const BudgetExceeded &e) {
    outcome.budget_exceeded = true;
    ++outcome.errors;
    text = std::ostringstream();
    if (opt.format == "csv") {
      text << "# error " << item.file << ":" << item.index << " budget exceeded\n";
    } else {
      json rec;
      rec["file"] = item.file;
      rec["index"] = item.index;
      rec["graph_hash"] = hash;
      rec["version"] = CLIQUEBOUND_VERSION;
      rec["error"] = "budget_exceeded";
      rec["message"] = e.what();
      text << rec.dump() << '\n';
    }
  }
  outcome.text = text.str();
  return outcome;
}

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream *stream;

  OutputTarget(const std::string &path, std::ostream &fallback) : stream(&fallback) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) throw std::runtime_error("cannot write " + path);
    stream = file.get();
  }
};

int cmd_analyze(const AnalyzeOptions &opt_in, std::ostream &out, std::ostream &err) {
  AnalyzeOptions opt = opt_in;
  if (opt.t_max == 0) opt.t_max = opt.t;
  if (opt.t < 2 || opt.t_max > 16 || opt.t > opt.t_max) {
    err << "error: t range must satisfy 2 <= t <= t-max <= 16\n";
    return kUsageError;
  }
  if (opt.format != "json" && opt.format != "csv") {
    err << "error: --format must be json or csv\n";
    return kUsageError;
  }

  const auto files = expand_inputs(opt.inputs);
  std::vector<LoadedGraph> graphs;
  std::size_t unreadable = 0;
  std::ostringstream file_errors;
  for (const auto &f : files) {
    try {
      for (auto &g : load_graphs(f)) graphs.push_back(std::move(g));
    } catch (const std::exception &e) {
      ++unreadable;
      err << "error: " << f.string() << ": " << e.what() << '\n';
      if (opt.format == "csv") {
        file_errors << "# error " << f.string() << ": " << e.what() << '\n';
      } else {
        json rec;
        rec["file"] = f.string();
        rec["version"] = CLIQUEBOUND_VERSION;
        rec["error"] = "unreadable";
        rec["message"] = e.what();
        file_errors << rec.dump() << '\n';
      }
    }
  }
  if (files.empty()) {
    err << "error: no inputs\n";
    return kUsageError;
  }
  if (graphs.empty() && unreadable == files.size()) {
    err << "error: every input failed to load\n";
    return kUsageError;
  }

  std::vector<GraphOutcome> outcomes(graphs.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(opt.jobs, graphs.size()));
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < graphs.size();) outcomes[k] = analyze_graph(graphs[k], opt);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto &th : pool) th.join();

  OutputTarget target(opt.out, out);
  std::ostream &sink = *target.stream;
  std::size_t tight = 0, strict = 0, errors = unreadable;
  bool budget = false, invariant = false;
  if (opt.format == "csv") sink << "file,n,m,t,N,localized_bound,zykov_bound,tight,certificate\n";
  sink << file_errors.str();
  for (const auto &o : outcomes) {
    sink << o.text;
    tight += o.tight;
    strict += o.strict;
    errors += o.errors;
    budget = budget || o.budget_exceeded;
    invariant = invariant || o.invariant_failed;
  }
  if (opt.format == "csv") {
    sink << "# summary records=" << tight + strict << " tight=" << tight << " strict=" << strict
         << " errors=" << errors << '\n';
  } else {
    json summary;
    summary["records"] = tight + strict;
    summary["tight"] = tight;
    summary["strict"] = strict;
    summary["errors"] = errors;
    summary["version"] = CLIQUEBOUND_VERSION;
    sink << json{{"summary", summary}}.dump() << '\n';
  }
  if (invariant) return kInvariantFailure;
  if (budget) return kBudgetExceeded;
  return kSuccess;
}

struct GenerateOptions {
  std::string generator;
  std::string parts;
  std::size_t n = 0;
  std::string p = "1/2";
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string out = ".";
};

int cmd_generate(const GenerateOptions &opt, std::ostream &out, std::ostream &err) {
  std::vector<std::pair<std::string, Graph>> made;
  try {
    if (opt.generator == "multipartite") {
      const auto parts = parse_part_spec(opt.parts);
      std::string tag = to_string(parts);
      std::replace(tag.begin(), tag.end(), ',', '-');
      made.emplace_back("multipartite_" + tag + ".g6", generate_complete_multipartite(parts));
    } else if (opt.generator == "random") {
      const Rational p = parse_rational(opt.p);
      std::string ptag = to_string(p);
      std::replace(ptag.begin(), ptag.end(), '/', '-');
      for (std::size_t k = 0; k < opt.count; ++k) {
        const auto seed = opt.seed + k;
        made.emplace_back("random_n" + std::to_string(opt.n) + "_p" + ptag + "_seed" + std::to_string(seed) + ".g6",
                          generate_random(opt.n, p, seed));
      }
    } else {
      err << "error: unknown generator '" << opt.generator << "' (expected multipartite or random)\n";
      return kUsageError;
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::error_code ec;
  fs::create_directories(opt.out, ec);
  for (const auto &[name, g] : made) {
    const fs::path path = fs::path(opt.out) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << path.string() << '\n';
      return kUsageError;
    }
    file << to_graph6(g) << '\n';
    out << path.string() << '\n';
  }
  return kSuccess;
}

struct PhiOptions {
  std::string input;
  std::size_t t = 2;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::string out;
};

int cmd_phi(const PhiOptions &opt, std::ostream &out, std::ostream &err) {
  if (opt.t < 2 || opt.t > 16) {
    err << "error: t must lie in [2, 16]\n";
    return kUsageError;
  }
  std::vector<LoadedGraph> graphs;
  try {
    graphs = load_graphs(opt.input);
  } catch (const std::exception &e) {
    err << "error: " << opt.input << ": " << e.what() << '\n';
    return kUsageError;
  }
  if (graphs.size() != 1 || graphs.front().graph.n() == 0) {
    err << "error: phi expects exactly one graph with at least one vertex\n";
    return kUsageError;
  }
  const Graph &g = graphs.front().graph;
  OutputTarget target(opt.out, out);
  std::ostream &sink = *target.stream;
  try {
    const auto profile = vertex_clique_numbers(g, budget_from(opt.budget));
    const auto uniform = SimplexPoint::uniform(g.n());
    const auto phi = eval_phi(g, opt.t, profile, uniform);
    json head;
    head["kind"] = "phi_uniform";
    head["file"] = opt.input;
    head["graph_hash"] = graph_hash(g);
    head["version"] = CLIQUEBOUND_VERSION;
    head["n"] = g.n();
    head["t"] = opt.t;
    head["A"] = to_string(phi.a);
    head["B"] = to_string(phi.b);
    rational_pair(head, "phi", phi.phi);
    sink << head.dump() << '\n';

    const auto nonneg = verify_nonnegativity(g, opt.t, profile, std::max<std::size_t>(opt.samples, 1), opt.seed);
    json sampled;
    sampled["kind"] = "nonnegativity";
    sampled["points"] = nonneg.points_evaluated;
    rational_pair(sampled, "min_phi", nonneg.min_phi);
    sampled["argmin"] = nonneg.argmin;
    sink << sampled.dump() << '\n';

    const auto trace = descend_to_clique_support(g, opt.t, profile, uniform);
    write_trace(sink, trace);
    json summary;
    summary["kind"] = "descent";
    summary["steps"] = trace.steps.size();
    summary["phi_start"] = to_string(trace.phi_start);
    summary["phi_end"] = to_string(trace.phi_end);
    summary["end_support"] = trace.end.support().to_vector();
    summary["end_support_is_clique"] = trace.end_support_is_clique;
    summary["omega_end"] = trace.omega_end;
    sink << summary.dump() << '\n';

    const auto structure = check_minimizer_structure(g, opt.t, profile, trace);
    json st;
    st["kind"] = "structure";
    st["applicable"] = structure.applicable;
    st["reason"] = structure.reason;
    if (structure.applicable) {
      st["uniform_complete_multipartite"] = structure.uniform.complete_multipartite;
      st["uniform_omega"] = structure.uniform.omega;
      st["uniform_equal_part_masses"] = structure.uniform.equal_part_masses;
      if (structure.end) {
        st["end_complete_multipartite"] = structure.end->complete_multipartite;
        st["end_equal_part_masses"] = structure.end->equal_part_masses;
      }
    }
    sink << st.dump() << '\n';
    if (structure.applicable && !structure.passed()) return kInvariantFailure;
    return phi.phi == 0 ? kSuccess : kStrict;
  } catch (const BudgetExceeded &e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InvariantViolation &e) {
    err << "invariant violated: " << e.what() << '\n';
    return kInvariantFailure;
  }
}

struct SelfcheckCliOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::size_t random_graphs = 30;
  std::size_t t_max = 5;
  std::uint64_t budget = 0;
};

int cmd_selfcheck(const SelfcheckCliOptions &opt, std::ostream &out) {
  SelfcheckOptions options;
  options.seed = opt.seed;
  options.samples = std::max<std::size_t>(opt.samples, 1);
  options.random_graphs = opt.random_graphs;
  options.t_max = opt.t_max;
  options.budget = budget_from(opt.budget);
  const auto result = run_selfcheck(options, out);
  if (!result.failures.empty()) return kInvariantFailure;
  if (result.budget_errors) return kBudgetExceeded;
  return kSuccess;
}

} // namespace

int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact vertex-localized clique-count bounds and simplex-potential checks", "cliquebound"};
  app.set_version_flag("--version", CLIQUEBOUND_VERSION);
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto *a = app.add_subcommand("analyze", "Report every bound for each input graph and t");
  a->add_option("inputs", analyze.inputs, "Graph files (.g6, .el) or directories")->required();
  a->add_option("--t", analyze.t, "Smallest clique order (>= 2)");
  a->add_option("--t-max", analyze.t_max, "Largest clique order (<= 16, default --t)");
  a->add_option("--format", analyze.format, "json or csv");
  a->add_option("--budget", analyze.budget, "Recursion-node budget per clique search, 0 = unlimited");
  a->add_option("--out", analyze.out, "Write records to this file instead of stdout");
  a->add_option("--jobs", analyze.jobs, "Worker threads");

  GenerateOptions generate;
  auto *gsub = app.add_subcommand("generate", "Write generated graphs as graph6 files");
  gsub->add_option("generator", generate.generator, "multipartite or random")->required();
  gsub->add_option("--parts", generate.parts, "Part sizes, e.g. 2,2,2");
  gsub->add_option("--n", generate.n, "Vertex count (random)");
  gsub->add_option("--p", generate.p, "Edge probability as p/q or decimal (random)");
  gsub->add_option("--seed", generate.seed, "First seed (random)");
  gsub->add_option("--count", generate.count, "Number of consecutive seeds (random)");
  gsub->add_option("--out", generate.out, "Output directory");

  PhiOptions phi;
  auto *p = app.add_subcommand("phi", "Evaluate the simplex potential and run transfer descent");
  p->add_option("input", phi.input, "One graph file")->required();
  p->add_option("--t", phi.t, "Clique order (>= 2)");
  p->add_option("--samples", phi.samples, "Random simplex points");
  p->add_option("--seed", phi.seed, "Sampler seed");
  p->add_option("--budget", phi.budget, "Recursion-node budget, 0 = unlimited");
  p->add_option("--out", phi.out, "Write records to this file instead of stdout");

  SelfcheckCliOptions self;
  auto *s = app.add_subcommand("selfcheck", "Run oracle-equivalence and invariant suites on the built-in corpus");
  s->add_option("--seed", self.seed, "Corpus and sampler seed");
  s->add_option("--samples", self.samples, "Random simplex points per (graph, t)");
  s->add_option("--random-graphs", self.random_graphs, "Seeded random graphs in the corpus");
  s->add_option("--t-max", self.t_max, "Largest clique order checked");
  s->add_option("--budget", self.budget, "Recursion-node budget, 0 = unlimited");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, out, err);
    if (gsub->parsed()) return cmd_generate(generate, out, err);
    if (p->parsed()) return cmd_phi(phi, out, err);
    if (s->parsed()) return cmd_selfcheck(self, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("cliquebound");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace cliquebound::cli
