#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rwet {

// No single codebook beam can cover a whole cluster from any center.
struct FeasibleBeamNotFound : std::runtime_error {
  explicit FeasibleBeamNotFound(const std::string& what) : std::runtime_error(what) {}
};

// Charging allocation cannot satisfy some harvesters: they receive zero
// harvested power under every selected (anchor, beam) pair.
struct InfeasibleCharging : std::runtime_error {
  std::vector<int> eh_indices;

  InfeasibleCharging(const std::string& what, std::vector<int> indices)
      : std::runtime_error(what), eh_indices(std::move(indices)) {}
};

// Malformed scenario/plan document.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rwet
