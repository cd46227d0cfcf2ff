#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "occlearn/dfa_learn.hpp"
#include "occlearn/ltlf_learn.hpp"
#include "occlearn/oracle.hpp"
#include "bench.hpp"
#include "gen.hpp"
#include "report.hpp"

namespace occlearn::cli {
namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// learn

struct LearnArgs {
  std::string mode = "dfa";
  std::string algo = "sym";
  std::uint32_t size_bound = 3;
  std::uint32_t horizon = 8;
  double timeout = 0;  // seconds; 0 = none
  std::uint64_t seed = 0;
  std::string sample_path;
  std::string out_path;
  std::string stats_path;
  std::string format = "text";
  std::string solver_path;
  std::string debug_dir;
  bool debug = false;
};

std::string dfa_text(const Dfa& a) {
  std::ostringstream out;
  out << "states: " << a.num_states() << "\ninitial: 1\nfinal:";
  for (State q : a.finals()) out << " " << q;
  out << "\n";
  for (State q = 1; q <= a.num_states(); ++q)
    for (SymbolId s = 0; s < a.alphabet().size(); ++s)
      out << q << " --" << a.alphabet().name(s) << "--> " << a.delta(q, s)
          << "\n";
  return out.str();
}

int cmd_learn(const LearnArgs& args) {
  Sample sample = load_sample(args.sample_path);
  LearnConfig cfg;
  cfg.size_bound = args.size_bound;
  cfg.solver.seed = args.seed;
  if (!args.solver_path.empty()) cfg.solver.external_path = args.solver_path;
  if (args.timeout > 0)
    cfg.total_budget = std::chrono::duration<double>(args.timeout);
  cfg.debug = args.debug;
  cfg.debug_dir = args.debug_dir;

  RunStats stats;
  std::string rendered;
  std::uint32_t size = 0;
  if (args.mode == "dfa") {
    DfaLearnResult res = args.algo == "sym"   ? learn_sym_dfa(sample, cfg)
                         : args.algo == "ceg" ? learn_ceg_dfa(sample, cfg)
                                              : learn_ssym_dfa(sample, cfg);
    stats = res.stats;
    size = res.dfa.num_states();
    if (args.format == "dot") rendered = emit_dot(res.dfa);
    else if (args.format == "json") rendered = to_json(res.dfa) + "\n";
    else rendered = dfa_text(res.dfa);
  } else {
    if (sample.contains_empty_word())
      throw Error("the empty word has no LTLf semantics; remove it or use "
                  "--mode dfa");
    LtlfLearnResult res =
        args.algo == "ssym"
            ? learn_ssym_ltlf(sample, cfg, HorizonConfig{args.horizon})
            : learn_ceg_ltlf(sample, cfg);
    stats = res.stats;
    size = static_cast<std::uint32_t>(res.formula.size());
    if (args.format == "dot") rendered = emit_dot(res.formula);
    else if (args.format == "json")
      rendered = "{\"formula\": \"" + print_formula(res.formula) +
                 "\", \"size\": " + std::to_string(size) + "}\n";
    else rendered = print_formula(res.formula) + "\n";
  }
  write_output(args.out_path, rendered);

  BenchRow row = row_from_stats(args.sample_path, args.algo, stats);
  row.model_size = size;
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  write_csv_row(csv, row);
  if (!args.stats_path.empty()) write_output(args.stats_path, csv.str());
  else if (!args.out_path.empty()) std::cout << csv.str();
  else std::cerr << csv.str();

  return stats.reason == TerminationReason::Timeout ? 2 : 0;
}

// ---------------------------------------------------------------------------
// gen-sample

struct GenArgs {
  std::uint32_t random_dfa_size = 0;
  std::string formula;
  bool traces = false;
  std::string alphabet;
  std::size_t count = 20;
  std::size_t min_len = 1;
  std::size_t max_len = 10;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen_sample(const GenArgs& args) {
  GenSpec spec{args.count, args.min_len, args.max_len, args.seed, true};
  Sample sample{Alphabet({"a"}), {}};
  if (args.random_dfa_size > 0) {
    if (args.alphabet.empty())
      throw Error("--from-random-dfa requires --alphabet");
    sample = random_dfa_sample(args.random_dfa_size,
                               parse_alphabet(args.alphabet), spec);
  } else if (!args.formula.empty()) {
    if (args.alphabet.empty()) throw Error("--from-formula requires --alphabet");
    sample.alphabet = parse_alphabet(args.alphabet);
    LtlfFormula phi = parse_formula(args.formula, sample.alphabet);
    sample.positives = formula_words(phi, spec);
  } else if (args.traces) {
    sample = trace_sample(spec);
  } else {
    throw Error("choose a source: --from-random-dfa, --from-formula, or "
                "--from-traces");
  }
  write_output(args.out_path, serialize_sample(sample));
  return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string model_path;
  std::string sample_path;
  std::uint32_t oracle_max_size = 3;
};

int cmd_check(const CheckArgs& args) {
  Sample sample = load_sample(args.sample_path);
  std::string model = read_file(args.model_path);
  bool ok = true;
  std::string verdict = "skipped";

  auto first_char = model.find_first_not_of(" \t\r\n");
  bool is_dfa = first_char != std::string::npos &&
                (model.compare(first_char, 7, "digraph") == 0 ||
                 model[first_char] == '{');
  if (is_dfa) {
    Dfa a = model[first_char] == '{' ? dfa_from_json(model) : parse_dot(model);
    bool accepts_all = true;
    for (const Word& w : sample.positives)
      if (!a.accepts(w)) accepts_all = false;
    std::cout << "model: dfa with " << a.num_states() << " states\n"
              << "accepts-sample: " << (accepts_all ? "yes" : "no") << "\n";
    ok = accepts_all;
    if (!dfa_oracle_feasible(args.oracle_max_size, sample.alphabet)) {
      std::cout << "minimality: skipped (oracle bound " << args.oracle_max_size
                << " too large for exhaustive search)\n";
    } else if (auto smaller =
                   find_smaller_description(a, sample, args.oracle_max_size)) {
      verdict = "fail";
      ok = false;
      std::cout << "minimality: fail (witness below follows)\n"
                << emit_dot(*smaller);
    } else {
      verdict = "pass";
      std::cout << "minimality: pass\n";
    }
  } else {
    // strip trailing newline, parse as a formula over the sample's alphabet
    LtlfFormula phi = parse_formula(model, sample.alphabet);
    bool sat_all = true;
    for (const Word& w : sample.positives)
      if (w.empty() || !satisfies(w, phi)) sat_all = false;
    std::cout << "model: formula of size " << phi.size() << "\n"
              << "satisfies-sample: " << (sat_all ? "yes" : "no") << "\n";
    ok = sat_all;
    if (!ltlf_oracle_feasible(args.oracle_max_size, sample.alphabet)) {
      std::cout << "minimality: skipped (oracle bound " << args.oracle_max_size
                << " too large for exhaustive search)\n";
    } else if (auto stricter = find_stricter_formula(
                   phi, sample, args.oracle_max_size, default_operator_set())) {
      verdict = "fail";
      ok = false;
      std::cout << "minimality: fail (stricter: " << print_formula(*stricter)
                << ")\n";
    } else {
      verdict = "pass";
      std::cout << "minimality: pass\n";
    }
  }
  (void)verdict;
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace occlearn::cli

int main(int argc, char** argv) {
  using namespace occlearn;
  using namespace occlearn::cli;

  CLI::App app{"SAT-based learner for language-minimal DFAs and LTLf "
               "formulas from positive examples"};
  app.require_subcommand(1);

  LearnArgs learn_args;
  auto* learn = app.add_subcommand("learn", "learn a model from a sample");
  learn->add_option("--mode", learn_args.mode, "dfa or ltlf")
      ->check(CLI::IsMember({"dfa", "ltlf"}));
  learn->add_option("--algo", learn_args.algo, "sym, ceg, or ssym")
      ->check(CLI::IsMember({"sym", "ceg", "ssym"}));
  learn->add_option("--size-bound", learn_args.size_bound, "model size bound");
  learn->add_option("--horizon", learn_args.horizon,
                    "symbolic word length bound (ltlf ssym)");
  learn->add_option("--timeout", learn_args.timeout, "total budget in seconds");
  learn->add_option("--seed", learn_args.seed, "solver seed");
  learn->add_option("--sample", learn_args.sample_path, "sample file")
      ->required();
  learn->add_option("--out", learn_args.out_path, "model output path");
  learn->add_option("--stats", learn_args.stats_path, "stats CSV path");
  learn->add_option("--format", learn_args.format, "text, dot, or json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  learn->add_option("--solver", learn_args.solver_path,
                    "external DIMACS solver executable");
  learn->add_flag("--debug", learn_args.debug, "per-iteration audits");
  learn->add_option("--debug-dir", learn_args.debug_dir,
                    "dump per-iteration CNF/DOT files here");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen-sample", "generate a positive sample");
  gen->add_option("--from-random-dfa", gen_args.random_dfa_size,
                  "sample words accepted by a random DFA of this size");
  gen->add_option("--from-formula", gen_args.formula,
                  "sample words satisfying this LTLf formula");
  gen->add_flag("--from-traces", gen_args.traces,
                "synthetic flight traces (battery x maneuver features)");
  gen->add_option("--alphabet", gen_args.alphabet, "comma-separated names");
  gen->add_option("--count", gen_args.count, "number of words");
  gen->add_option("--min-len", gen_args.min_len, "minimum word length");
  gen->add_option("--max-len", gen_args.max_len, "maximum word length");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out_path, "output path");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run a benchmark manifest");
  bench->add_option("--manifest", bench_args.manifest_path, "manifest file")
      ->required();
  bench->add_option("--out", bench_args.csv_path, "CSV output path");
  bench->add_option("--plots", bench_args.plot_dir,
                    "directory for SVG scatter plots");
  bench->add_option("--jobs", bench_args.jobs, "concurrent runs");
  bench->add_flag("--debug", bench_args.debug,
                  "per-iteration invariant audits in every run");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "verify a learned model");
  check->add_option("--model", check_args.model_path, "model file")
      ->required();
  check->add_option("--sample", check_args.sample_path, "sample file")
      ->required();
  check->add_option("--oracle-max-size", check_args.oracle_max_size,
                    "exhaustive-search bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (learn->parsed()) {
      if (learn_args.mode == "ltlf" && learn_args.algo == "sym") {
        std::cerr << "error: --algo sym is not available in ltlf mode; the "
                     "fully symbolic formula learner needs quantified solving "
                     "and is out of scope. Use ssym or ceg.\n";
        return 1;
      }
      return cmd_learn(learn_args);
    }
    if (gen->parsed()) return cmd_gen_sample(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (check->parsed()) return cmd_check(check_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
