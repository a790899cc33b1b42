#include "homset/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "homset/bounds.hpp"
#include "homset/extractor.hpp"
#include "homset/generators.hpp"
#include "homset/io.hpp"
#include "homset/oracle.hpp"
#include "homset/sweep.hpp"

namespace homset::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

long long parse_ll(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse integer '" + s + "'");
  }
  if (pos != s.size()) throw InvalidInput("cannot parse integer '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse number '" + s + "'");
  }
  if (pos != s.size()) throw InvalidInput("cannot parse number '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& part : split(s, ','))
    out.push_back((int)parse_ll(part));
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_double(part));
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

// eps accepts "p/q" (compared exactly downstream) or a decimal.
struct EpsValue {
  bool is_rational = false;
  Rational rational;
  double value = 0.0;
};

EpsValue parse_eps(const std::string& s) {
  EpsValue e;
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    e.is_rational = true;
    e.rational.num = parse_ll(s.substr(0, slash));
    e.rational.den = parse_ll(s.substr(slash + 1));
    if (e.rational.den == 0) throw InvalidInput("eps denominator is zero");
    e.value = double(e.rational.num) / double(e.rational.den);
  } else {
    e.value = parse_double(s);
  }
  return e;
}

void print_trace(const ExtractionTrace& tr, std::ostream& out) {
  out << "t case " << to_string(tr.case_used) << "\n";
  out << "t w_removed " << tr.w_removed.size() << "\n";
  out << "t clique_history";
  for (auto [it, size] : tr.clique_history) out << " " << it << ":" << size;
  out << "\n";
  out << "t a_prime";
  for (int v : tr.a_prime) out << " " << v + 1;
  out << "\n";
  out << "t b_prime_size " << tr.b_prime_size << "\n";
  out << "t es_calls " << tr.es_calls << "\n";
  for (const AssertionRecord& a : tr.assertions_checked)
    out << "t assert " << a.name << " observed " << a.observed << " required "
        << a.required << " " << (a.pass ? "pass" : "fail") << "\n";
}

struct GenArgs {
  int n = 0;
  long long m = 0;
  std::string eps_text;
  int turan_r = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct BalanceArgs {
  std::string path;
  std::string eps_text;
};

struct ExtractArgs {
  std::string path;
  double k = 0.0;
  double C = 0.01;
  std::string initial_clique_text;
  bool trace = false;
  std::string out_path;
};

struct VerifyArgs {
  std::string graph_path;
  std::string witness_path;
  double k = 0.0;
  double C = 0.01;
};

struct OracleArgs {
  std::string path;
  int stop_at = 0;
  bool have_stop_at = false;
  double budget_secs = 30.0;
};

struct SweepArgs {
  std::string n_list_text;
  std::string k_list_text;
  double C = 0.01;
  int reps = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  bool no_timing = false;
};

int run_gen(const GenArgs& a, int chosen, std::ostream& out) {
  std::variant<Graph, TwoColoring> result;
  switch (chosen) {
    case 0:
      result = random_graph_exact_edges(a.n, a.m, a.seed);
      break;
    case 1: {
      EpsValue eps = parse_eps(a.eps_text);
      result = eps.is_rational
                   ? random_unbalanced_coloring(a.n, eps.rational, a.seed)
                   : random_unbalanced_coloring(a.n, eps.value, a.seed);
      break;
    }
    default:
      result = turan_graph(a.n, a.turan_r);
      break;
  }
  if (std::holds_alternative<Graph>(result)) {
    const Graph& g = std::get<Graph>(result);
    if (a.out_path.empty())
      write_graph(g, out);
    else
      write_graph_file(g, a.out_path);
  } else {
    const TwoColoring& c = std::get<TwoColoring>(result);
    if (a.out_path.empty())
      write_coloring(c, out);
    else
      write_coloring_file(c, a.out_path);
  }
  return 0;
}

int run_balance(const BalanceArgs& a, std::ostream& out) {
  TwoColoring c = read_coloring_file(a.path);
  EpsValue eps = parse_eps(a.eps_text);
  bool balanced = eps.is_rational ? is_eps_balanced(c, eps.rational)
                                  : is_eps_balanced(c, eps.value);
  out << "red " << c.red_count() << " blue " << c.blue_count() << " total "
      << c.total_edges() << "\n";
  out << (balanced ? "balanced" : "unbalanced") << "\n";
  return balanced ? 0 : 3;
}

int run_extract(const ExtractArgs& a, std::ostream& out) {
  std::variant<Graph, TwoColoring> payload =
      read_graph_or_coloring_file(a.path);
  Graph g = std::holds_alternative<Graph>(payload)
                ? std::move(std::get<Graph>(payload))
                : majority_graph(std::get<TwoColoring>(payload)).first;
  TheoremParams p = validate_params(g.order(), a.k, a.C);

  std::pair<HomogeneousWitness, ExtractionTrace> result;
  if (!a.initial_clique_text.empty()) {
    if (classify_case(p) != CaseLabel::Case3)
      throw InvalidInput(
          "--initial-clique only applies when 100 < k < sqrt(n)");
    std::vector<int> clique;
    for (int v : parse_int_list(a.initial_clique_text)) {
      if (v < 1) throw InvalidInput("clique vertices are 1-indexed");
      clique.push_back(v - 1);
    }
    result = extract_case3(g, p, std::move(clique));
    if (!verify_witness(g, result.first, p))
      throw InvariantBreach("witness_verifies",
                            double(result.first.vertices.size()),
                            target_size(p));
  } else {
    result = extract(g, p);
  }

  if (a.trace) print_trace(result.second, out);
  if (a.out_path.empty())
    write_witness(result.first, out);
  else
    write_witness_file(result.first, a.out_path);
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  Graph g = read_graph_file(a.graph_path);
  HomogeneousWitness w = read_witness_file(a.witness_path);
  TheoremParams p = validate_params(g.order(), a.k, a.C);
  bool ok = verify_witness(g, w, p);
  out << "witness " << to_string(w.kind) << " size " << w.size()
      << " target " << target_size(p) << "\n";
  out << (ok ? "verified" : "not verified") << "\n";
  return ok ? 0 : 1;
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
  Graph g = read_graph_file(a.path);
  OracleOptions opts;
  if (a.have_stop_at) opts.stop_at = a.stop_at;
  opts.budget_secs = a.budget_secs;
  OracleResult clique = max_clique_exact(g, opts);
  OracleResult indep = max_independent_set_exact(g, opts);
  out << "clique " << clique.best_size << " exhausted " << clique.exhausted
      << " nodes " << clique.nodes_explored << "\n";
  out << "independent_set " << indep.best_size << " exhausted "
      << indep.exhausted << " nodes " << indep.nodes_explored << "\n";
  return 0;
}

int run_sweep_cmd(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.n_list = parse_int_list(a.n_list_text);
  config.k_list = parse_double_list(a.k_list_text);
  config.C = a.C;
  config.reps = a.reps;
  config.seed = a.seed;
  config.measure_time = !a.no_timing;
  if (config.reps < 1) throw InvalidInput("--reps must be >= 1");

  SweepOutcome outcome = run_sweep(config);
  if (outcome.skipped_cells > 0)
    err << "note: skipped " << outcome.skipped_cells
        << " grid cells with invalid parameters\n";
  if (a.out_path.empty()) {
    write_csv(outcome.rows, out);
  } else {
    std::ostringstream buf;
    write_csv(outcome.rows, buf);
    std::ofstream f(a.out_path);
    if (!f) throw ParseError(0, "cannot open file for writing: " + a.out_path);
    f << buf.str();
    f.flush();
    if (!f) throw ParseError(0, "write failed: " + a.out_path);
  }
  return outcome.all_verified ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certified clique / independent-set extraction from dense "
               "graphs and unbalanced colorings",
               "homset"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen", "generate a graph or coloring instance");
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  CLI::Option* opt_m =
      gen->add_option("--m", gen_args.m, "exact edge count (random graph)");
  CLI::Option* opt_eps = gen->add_option(
      "--eps", gen_args.eps_text,
      "imbalance, decimal or p/q (unbalanced coloring)");
  CLI::Option* opt_r = gen->add_option("--turan-r", gen_args.turan_r,
                                       "part count (complete multipartite)");
  opt_m->excludes(opt_eps)->excludes(opt_r);
  opt_eps->excludes(opt_r);
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--out", gen_args.out_path, "output file (default stdout)");

  BalanceArgs balance_args;
  CLI::App* balance = app.add_subcommand(
      "balance", "check whether a coloring is eps-balanced");
  balance->add_option("file", balance_args.path, "coloring file")->required();
  balance->add_option("--eps", balance_args.eps_text, "decimal or p/q")
      ->required();

  ExtractArgs extract_args;
  CLI::App* extract_cmd = app.add_subcommand(
      "extract", "extract a certified clique or independent set");
  extract_cmd
      ->add_option("file", extract_args.path,
                   "graph file, or coloring file (its majority graph is used)")
      ->required();
  extract_cmd->add_option("--k", extract_args.k, "density parameter k")
      ->required();
  extract_cmd->add_option("--C", extract_args.C, "target constant C");
  extract_cmd->add_option("--initial-clique", extract_args.initial_clique_text,
                          "comma-separated 1-indexed seed clique");
  extract_cmd->add_flag("--trace", extract_args.trace,
                        "print the extraction trace");
  extract_cmd->add_option("--out", extract_args.out_path,
                          "witness file (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check a witness against a graph and parameters");
  verify->add_option("--graph", verify_args.graph_path, "graph file")
      ->required();
  verify->add_option("--witness", verify_args.witness_path, "witness file")
      ->required();
  verify->add_option("--k", verify_args.k, "density parameter k")->required();
  verify->add_option("--C", verify_args.C, "target constant C");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exact maximum clique and independent set sizes");
  oracle->add_option("file", oracle_args.path, "graph file")->required();
  CLI::Option* opt_stop =
      oracle->add_option("--stop-at", oracle_args.stop_at,
                         "return once a set this large is found");
  oracle->add_option("--budget-secs", oracle_args.budget_secs,
                     "time budget per search");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "grid of seeded extractions, reported as CSV");
  sweep->add_option("--n-list", sweep_args.n_list_text, "comma-separated n")
      ->required();
  sweep->add_option("--k-list", sweep_args.k_list_text, "comma-separated k")
      ->required();
  sweep->add_option("--C", sweep_args.C, "target constant C");
  sweep->add_option("--reps", sweep_args.reps, "instances per grid cell");
  sweep->add_option("--seed", sweep_args.seed, "base seed");
  sweep->add_option("--out", sweep_args.out_path, "CSV file (default stdout)");
  sweep->add_flag("--no-timing", sweep_args.no_timing,
                  "write elapsed_ms as 0 so output is byte-stable");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ERROR 2: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(gen)) {
      int provided = (opt_m->count() ? 1 : 0) + (opt_eps->count() ? 1 : 0) +
                     (opt_r->count() ? 1 : 0);
      if (provided != 1)
        throw InvalidInput("exactly one of --m, --eps, --turan-r is required");
      int chosen = opt_m->count() ? 0 : (opt_eps->count() ? 1 : 2);
      return run_gen(gen_args, chosen, out);
    }
    if (app.got_subcommand(balance)) return run_balance(balance_args, out);
    if (app.got_subcommand(extract_cmd)) return run_extract(extract_args, out);
    if (app.got_subcommand(verify)) return run_verify(verify_args, out);
    if (app.got_subcommand(oracle)) {
      oracle_args.have_stop_at = opt_stop->count() > 0;
      return run_oracle(oracle_args, out);
    }
    if (app.got_subcommand(sweep)) return run_sweep_cmd(sweep_args, out, err);
    err << "ERROR 2: no subcommand\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "ERROR 4: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "ERROR 2: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "ERROR 2: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace homset::cli
