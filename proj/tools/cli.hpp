#pragma once

#include <string>
#include <vector>

#include "colehopf/heat.hpp"
#include "colehopf/oracle.hpp"
#include "colehopf/params.hpp"

namespace colehopf::cli {

struct ErfTableExtent {
  double re_min = -6.0;
  double re_max = 6.0;
  double im_min = -3.0;
  double im_max = 3.0;
  double step = 0.25;
};

/// One fully-resolved run: the JSON config plus command-line overrides.
struct RunConfig {
  std::string command;
  PhysicalParams params;
  Grid1D grid = {-8.0, 8.0, 2048, 16.0 / 2047.0};
  InitialCondition ic = DeltaIC{1.0};
  double t = 1.0;
  SolutionMode mode = SolutionMode::derived;
  std::string out_dir = "out";
  std::vector<int> grid_sizes = {256, 512, 1024, 2048};
  FDConfig fd;
  bool fd_check = false;
  std::vector<double> compare_strengths;  // compare-eq13 N values; defaults to strength_N
  ErfTableExtent erf_table;
};

/// Reads and validates the config file. Paths inside the config (sampled
/// ICs) resolve relative to the config file's directory.
RunConfig load_run_config(const std::string& command, const std::string& config_path);

int run_solve(const RunConfig& cfg);
int run_roundtrip(const RunConfig& cfg);
int run_converge(const RunConfig& cfg);
int run_compare_eq13(const RunConfig& cfg);
int run_erf_table(const RunConfig& cfg);

int run_command(const RunConfig& cfg);

/// Full CLI: colehopf <command> <config.json> [--out-dir DIR] [--mode ...].
/// Any failure exits nonzero with a single JSON error object on stderr.
int dispatch(int argc, char** argv);

}  // namespace colehopf::cli
