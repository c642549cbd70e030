// Copyright 2026 The pcsnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Core network containers shared by the simulator and both learners.

#ifndef PCSNN_TYPES_HPP_
#define PCSNN_TYPES_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "pcsnn/check.hpp"

namespace pcsnn {

// Spike latency per neuron in integer timesteps. The value t_max means
// "fires in the last slot or never"; dead neurons report exactly t_max.
using FiringTimes = std::vector<int>;

// Layer widths, input first, class count last.
struct Topology {
  std::vector<int> layer_sizes;

  int input_size() const { return layer_sizes.front(); }
  int class_count() const { return layer_sizes.back(); }
  // Number of weighted layers (l_max).
  int weighted_layers() const {
    return static_cast<int>(layer_sizes.size()) - 1;
  }

  void validate() const {
    PCSNN_CHECK_DIM(layer_sizes.size() >= 2,
                    "topology needs at least 2 layers, got ",
                    layer_sizes.size());
    for (std::size_t l = 0; l < layer_sizes.size(); ++l) {
      PCSNN_CHECK_DIM(layer_sizes[l] >= 1, "layer ", l, " has size ",
                      layer_sizes[l], "; every layer must be non-empty");
    }
  }

  bool operator==(const Topology&) const = default;
};

// Dense synaptic weights between two adjacent layers, stored row-major
// with one row per postsynaptic neuron.
struct WeightMatrix {
  int post_count = 0;
  int pre_count = 0;
  std::vector<double> w;

  WeightMatrix() = default;
  WeightMatrix(int posts, int pres)
      : post_count(posts), pre_count(pres),
        w(static_cast<std::size_t>(posts) * pres, 0.0) {}

  double& at(int post, int pre) {
    return w[static_cast<std::size_t>(post) * pre_count + pre];
  }
  double at(int post, int pre) const {
    return w[static_cast<std::size_t>(post) * pre_count + pre];
  }
  std::span<double> row(int post) {
    return {w.data() + static_cast<std::size_t>(post) * pre_count,
            static_cast<std::size_t>(pre_count)};
  }
  std::span<const double> row(int post) const {
    return {w.data() + static_cast<std::size_t>(post) * pre_count,
            static_cast<std::size_t>(pre_count)};
  }

  void validate() const {
    PCSNN_CHECK_DIM(w.size() ==
                        static_cast<std::size_t>(post_count) * pre_count,
                    "weight storage size ", w.size(), " does not match ",
                    post_count, "x", pre_count);
    for (double x : w) {
      PCSNN_CHECK_RANGE(std::isfinite(x), "non-finite weight entry");
    }
  }

  bool operator==(const WeightMatrix&) const = default;
};

struct NetworkParams {
  Topology topology;
  std::vector<WeightMatrix> weights;  // one per weighted layer

  void validate() const {
    topology.validate();
    PCSNN_CHECK_DIM(
        weights.size() == static_cast<std::size_t>(topology.weighted_layers()),
        "expected ", topology.weighted_layers(), " weight matrices, got ",
        weights.size());
    for (int l = 0; l < topology.weighted_layers(); ++l) {
      const WeightMatrix& m = weights[l];
      PCSNN_CHECK_DIM(m.post_count == topology.layer_sizes[l + 1] &&
                          m.pre_count == topology.layer_sizes[l],
                      "weight layer ", l, " is ", m.post_count, "x",
                      m.pre_count, " but topology wants ",
                      topology.layer_sizes[l + 1], "x",
                      topology.layer_sizes[l]);
      m.validate();
    }
  }

  bool operator==(const NetworkParams&) const = default;
};

// Simulation window and firing threshold.
struct SimParams {
  int t_max = 256;
  double threshold = 100.0;

  void validate() const {
    PCSNN_CHECK_RANGE(t_max >= 1, "t_max must be >= 1, got ", t_max);
    PCSNN_CHECK_RANGE(std::isfinite(threshold) && threshold > 0,
                      "threshold must be finite and positive");
  }
};

// Per-neuron membrane potential V(t) for t = 0..t_max.
using MembraneTrace = std::vector<std::vector<double>>;

// Firing times for every layer of one forward pass; layer 0 is the input.
struct LayerActivations {
  std::vector<FiringTimes> layers;
  // One trace per weighted layer when tracing was requested, else empty.
  std::vector<MembraneTrace> traces;

  const FiringTimes& output() const { return layers.back(); }
};

inline void check_firing_times(const FiringTimes& times, int expected_size,
                               int t_max) {
  PCSNN_CHECK_DIM(times.size() == static_cast<std::size_t>(expected_size),
                  "firing-time vector has ", times.size(),
                  " entries, expected ", expected_size);
  for (int t : times) {
    PCSNN_CHECK_RANGE(t >= 0 && t <= t_max, "firing time ", t,
                      " outside [0, ", t_max, "]");
  }
}

}  // namespace pcsnn

#endif  // PCSNN_TYPES_HPP_
