#ifndef CUTLAB_EXPERIMENTS_HPP
#define CUTLAB_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "cutlab/config.hpp"

namespace cutlab {

inline constexpr const char* kArtifactName = "cutset-lab";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct RunResult {
  std::string output_dir;
  std::vector<std::string> files;  // relative paths, manifest last
};

// Executes the named experiment; writes tables plus a manifest echoing the
// resolved config. Deterministic: identical config (and seed) reproduces the
// outputs byte for byte. Throws ConfigError / ResourceLimitError /
// CheckFailure (assertion regressions) / MarginError.
RunResult run_experiment(const ExperimentConfig& cfg);

std::vector<std::string> experiment_names();

}  // namespace cutlab

#endif
