#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "btbeam/params.hpp"

namespace btbeam {

/// Displacement/velocity pair on the interior grid nodes at time t.
struct State {
  Eigen::VectorXd u;
  Eigen::VectorXd v;
  double t = 0.0;
};

/// The energy E = (1/2)(bilap_sq + vel_sq + kappa*grad_sq) together with
/// its pieces and the nonlocal damping coefficient (bilap_sq + vel_sq)^q.
struct EnergyBreakdown {
  double e_total = 0.0;
  double bilap_sq = 0.0;  // ||D2 u||^2, bilaplacian quadratic form
  double vel_sq = 0.0;    // ||v||^2
  double grad_sq = 0.0;   // ||grad u||^2, gradient quadratic form
  double coeff = 0.0;     // (bilap_sq + vel_sq)^q
};

/// One trace sample. Envelope values are absent when the run has no
/// envelope guarantees (alpha = 0 or zero initial energy).
struct TraceSample {
  double t = 0.0;
  EnergyBreakdown energy;
  double dissipation = 0.0;
  std::optional<double> lower_env;
  std::optional<double> upper_env;
};

/// Time-sampled energy record of a single run.
struct EnergyTrace {
  std::vector<TraceSample> samples;
  ModelParams params_snapshot;
  double e0 = 0.0;  // first sample's e_total
};

}  // namespace btbeam
