#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/coin_io.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/graph.hpp"

namespace qwalk::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalError = 3 };

/// Everything a command needs to reproduce a run. Serialized verbatim into the
/// metadata sidecar and accepted back through --config.
struct RunConfig {
  std::optional<int> cycle;
  std::optional<std::string> graph_path;
  std::optional<PortGraph> graph;  // inline graph from a --config file
  CoinConfig coin;
  std::optional<ShiftKind> shift;
  CycleConvention convention = CycleConvention::ZeroAdvances;
  double beta = 0.0;
  double vertex_dephasing = 0.0;
  DephasingPlacement placement = DephasingPlacement::BeforeShift;
  int steps = 0;
  int start_vertex = 0;
  int start_port = 0;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out;

  // sweep
  std::vector<double> betas;
  // mix
  int t_max = 0;
  double epsilon = 0.05;
  // trajectory
  int samples = 1;
};

/// Entry point shared by the executable and the tests. Returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
