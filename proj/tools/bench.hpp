#pragma once

#include <cstdint>
#include <string>

namespace occlearn::cli {

struct BenchArgs {
  std::string manifest_path;
  std::string csv_path;   // empty = stdout
  std::string plot_dir;   // empty = no plots
  unsigned jobs = 1;
  bool debug = false;
};

/// Runs every (instance, algorithm) pair of the manifest, writes the CSV in
/// manifest order, optionally emits SVG scatter plots, and prints
/// geometric-mean iteration/time ratios. Returns a process exit code.
int run_bench(const BenchArgs& args);

}  // namespace occlearn::cli
