#include "bench.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "occlearn/dfa_learn.hpp"
#include "occlearn/ltlf_learn.hpp"
#include "occlearn/oracle.hpp"
#include "gen.hpp"
#include "report.hpp"

namespace occlearn::cli {
namespace {

struct Instance {
  std::string id;
  std::string mode = "dfa";            // dfa | ltlf
  std::vector<std::string> algos;
  std::uint32_t size_bound = 3;
  std::uint32_t horizon = 8;
  std::string source;                  // random-dfa | formula | traces | file
  std::uint32_t target_size = 2;
  std::string alphabet;
  std::string formula;
  std::string sample_path;
  std::size_t count = 20;
  std::size_t min_len = 1;
  std::size_t max_len = 10;
  std::uint64_t seed = 0;
  double timeout = 0;
};

struct Manifest {
  double timeout = 0;
  std::uint64_t seed = 0;
  std::vector<Instance> instances;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Manifest parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read manifest " + path);
  Manifest m;
  Instance* cur = nullptr;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string body = line.substr(start);
    if (body == "[instance]") {
      m.instances.emplace_back();
      cur = &m.instances.back();
      cur->seed = m.seed;
      cur->timeout = m.timeout;
      continue;
    }
    std::size_t colon = body.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", lineno);
    std::string key = body.substr(0, colon);
    std::string value = body.substr(colon + 1);
    std::size_t vs = value.find_first_not_of(" \t");
    value = vs == std::string::npos ? "" : value.substr(vs);

    try {
      if (!cur) {
        if (key == "timeout") m.timeout = std::stod(value);
        else if (key == "seed") m.seed = std::stoull(value);
        else throw ParseError("unknown global key '" + key + "'", lineno);
        continue;
      }
      if (key == "id") cur->id = value;
      else if (key == "mode") {
        if (value != "dfa" && value != "ltlf")
          throw ParseError("unknown mode '" + value + "'", lineno);
        cur->mode = value;
      }
      else if (key == "algos") cur->algos = split_csv(value);
      else if (key == "size-bound") cur->size_bound = std::stoul(value);
      else if (key == "horizon") cur->horizon = std::stoul(value);
      else if (key == "source") cur->source = value;
      else if (key == "target-size") cur->target_size = std::stoul(value);
      else if (key == "alphabet") cur->alphabet = value;
      else if (key == "formula") cur->formula = value;
      else if (key == "sample") cur->sample_path = value;
      else if (key == "count") cur->count = std::stoul(value);
      else if (key == "min-len") cur->min_len = std::stoul(value);
      else if (key == "max-len") cur->max_len = std::stoul(value);
      else if (key == "seed") cur->seed = std::stoull(value);
      else if (key == "timeout") cur->timeout = std::stod(value);
      else throw ParseError("unknown instance key '" + key + "'", lineno);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad number for key '" + key + "'", lineno);
    }
  }
  for (std::size_t i = 0; i < m.instances.size(); ++i) {
    Instance& inst = m.instances[i];
    if (inst.id.empty()) inst.id = "instance" + std::to_string(i + 1);
    if (inst.algos.empty())
      inst.algos = inst.mode == "ltlf"
                       ? std::vector<std::string>{"ssym", "ceg"}
                       : std::vector<std::string>{"sym", "ceg"};
    if (inst.source.empty())
      throw Error("instance " + inst.id + " has no source");
  }
  return m;
}

Sample materialize(const Instance& inst) {
  GenSpec spec{inst.count, inst.min_len, inst.max_len, inst.seed, false};
  if (inst.source == "file") return load_sample(inst.sample_path);
  if (inst.source == "random-dfa")
    return random_dfa_sample(inst.target_size, parse_alphabet(inst.alphabet),
                             spec);
  if (inst.source == "formula") {
    Alphabet sigma = parse_alphabet(inst.alphabet);
    Sample s{sigma, {}};
    s.positives = formula_words(parse_formula(inst.formula, sigma), spec);
    return s;
  }
  if (inst.source == "traces") return trace_sample(spec);
  throw Error("unknown sample source '" + inst.source + "'");
}

BenchRow run_one(const Instance& inst, const std::string& algo, bool debug) {
  Sample sample = materialize(inst);
  LearnConfig cfg;
  cfg.size_bound = inst.size_bound;
  cfg.solver.seed = inst.seed;
  cfg.debug = debug;
  if (inst.timeout > 0)
    cfg.total_budget = std::chrono::duration<double>(inst.timeout);

  BenchRow row;
  if (inst.mode == "dfa") {
    DfaLearnResult res = algo == "sym"   ? learn_sym_dfa(sample, cfg)
                         : algo == "ceg" ? learn_ceg_dfa(sample, cfg)
                                         : learn_ssym_dfa(sample, cfg);
    row = row_from_stats(inst.id, algo, res.stats);
    if (dfa_oracle_feasible(inst.size_bound, sample.alphabet))
      row.oracle = find_smaller_description(res.dfa, sample, inst.size_bound)
                       ? "fail"
                       : "pass";
  } else {
    if (algo == "sym")
      throw Error("algo 'sym' is not available for ltlf instances");
    LtlfLearnResult res =
        algo == "ssym"
            ? learn_ssym_ltlf(sample, cfg, HorizonConfig{inst.horizon})
            : learn_ceg_ltlf(sample, cfg);
    row = row_from_stats(inst.id, algo, res.stats);
    std::uint32_t bound = std::min<std::uint32_t>(3, inst.size_bound);
    if (ltlf_oracle_feasible(bound, sample.alphabet))
      row.oracle = find_stricter_formula(res.formula, sample, bound,
                                         default_operator_set())
                       ? "fail"
                       : "pass";
  }
  return row;
}

struct Point {
  double x, y;
  std::string label;
};

void write_scatter_svg(const std::string& path, const std::string& title,
                       const std::string& xlabel, const std::string& ylabel,
                       const std::vector<Point>& points) {
  const double w = 520, h = 520, margin = 60;
  double maxv = 1;
  for (const Point& p : points) maxv = std::max({maxv, p.x, p.y});
  maxv *= 1.1;
  auto sx = [&](double v) { return margin + v / maxv * (w - 2 * margin); };
  auto sy = [&](double v) { return h - margin - v / maxv * (h - 2 * margin); };
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"16\">" << title << "</text>\n"
      << "<line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\""
      << w - margin << "\" y2=\"" << h - margin
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\""
      << margin << "\" y2=\"" << h - margin << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\""
      << sx(maxv) << "\" y2=\"" << sy(maxv)
      << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"" << h - 16
      << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel
      << "</text>\n"
      << "<text x=\"18\" y=\"" << h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
         "18 " << h / 2 << ")\">" << ylabel << "</text>\n";
  for (const Point& p : points)
    out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
        << "\" r=\"4\" fill=\"steelblue\"><title>" << p.label
        << "</title></circle>\n";
  out << "</svg>\n";
}

double geometric_mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  double acc = 0;
  for (double x : xs) acc += std::log(std::max(x, 1e-9));
  return std::exp(acc / static_cast<double>(xs.size()));
}

}  // namespace

int run_bench(const BenchArgs& args) {
  Manifest manifest = parse_manifest(args.manifest_path);
  struct Task {
    const Instance* inst;
    std::string algo;
  };
  std::vector<Task> tasks;
  for (const Instance& inst : manifest.instances)
    for (const std::string& algo : inst.algos) tasks.push_back({&inst, algo});

  std::vector<BenchRow> rows(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  unsigned jobs = std::max(1u, args.jobs);
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        rows[i] = run_one(*tasks[i].inst, tasks[i].algo, args.debug);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  bool failed = false;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (!errors[i].empty()) {
      std::cerr << "error: " << tasks[i].inst->id << "/" << tasks[i].algo
                << ": " << errors[i] << "\n";
      failed = true;
    }
  if (failed) return 1;

  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  for (const BenchRow& row : rows) write_csv_row(csv, row);
  if (args.csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.csv_path);
    if (!out) throw Error("cannot write " + args.csv_path);
    out << csv.str();
  }

  // pair each instance's symbolic-flavor run against its ceg baseline
  std::map<std::string, const BenchRow*> by_key;
  for (const BenchRow& row : rows) by_key[row.instance + "/" + row.algorithm] = &row;
  std::vector<double> iter_ratios, time_ratios;
  std::vector<Point> iter_points, time_points;
  for (const Instance& inst : manifest.instances) {
    const std::string symalgo = inst.mode == "ltlf" ? "ssym" : "sym";
    auto s = by_key.find(inst.id + "/" + symalgo);
    auto c = by_key.find(inst.id + "/ceg");
    if (s == by_key.end() || c == by_key.end()) continue;
    double ci = std::max<double>(c->second->iterations, 1);
    double ct = std::max(c->second->wall_time_s, 1e-6);
    iter_ratios.push_back(s->second->iterations / ci);
    time_ratios.push_back(std::max(s->second->wall_time_s, 1e-6) / ct);
    iter_points.push_back({static_cast<double>(c->second->iterations),
                           static_cast<double>(s->second->iterations),
                           inst.id});
    time_points.push_back(
        {c->second->wall_time_s, s->second->wall_time_s, inst.id});
  }
  if (!iter_ratios.empty()) {
    std::cout << "geomean iteration ratio (symbolic/ceg): "
              << geometric_mean(iter_ratios) << "\n"
              << "geomean time ratio (symbolic/ceg): "
              << geometric_mean(time_ratios) << "\n";
  }
  if (!args.plot_dir.empty() && !iter_points.empty()) {
    std::filesystem::create_directories(args.plot_dir);
    write_scatter_svg(args.plot_dir + "/iterations.svg",
                      "Main-loop iterations", "ceg iterations",
                      "symbolic iterations", iter_points);
    write_scatter_svg(args.plot_dir + "/time.svg", "Wall time (s)",
                      "ceg seconds", "symbolic seconds", time_points);
  }
  return 0;
}

}  // namespace occlearn::cli
