#pragma once

#include <optional>

#include "btbeam/dynamics.hpp"
#include "btbeam/envelope.hpp"
#include "btbeam/operators.hpp"
#include "btbeam/params.hpp"
#include "btbeam/state.hpp"

namespace btbeam {

struct SchemeConfig {
  Scheme scheme = Scheme::modal_split;
  double dt = 1e-2;
  double substep_tol = 1e-12;   // fixed-point tolerance of the damping substep
  int max_substep_iters = 50;
};

/// Time stepper owning the eigen-data needed by the modal splitting.
///
/// rk4 is the classical explicit fourth-order step of the full rhs.
/// modal_split is Strang splitting: a half-step of the damping subsystem
/// (u frozen, the velocity norm solved by a scalar fixed point on the
/// implicit midpoint rule), an exact linear step in the stiffness
/// eigenbasis where each mode rotates with frequency sqrt(lambda_i), and
/// another half damping step.
class Integrator {
 public:
  Integrator(const DiscreteOperators& ops, const ModelParams& p,
             const SchemeConfig& cfg);

  State step(const State& s) const;

  const DiscreteOperators& ops() const { return ops_; }
  const SchemeConfig& config() const { return cfg_; }

 private:
  State step_rk4(const State& s) const;
  State step_modal(const State& s) const;
  void damp_half(Eigen::VectorXd& v, double bilap_sq_u, double delta) const;
  void damp_half_strong(Eigen::VectorXd& v, double bilap_sq_u,
                        double delta) const;

  DiscreteOperators ops_;
  ModelParams p_;
  SchemeConfig cfg_;
  EigenPairs stiff_;  // eigenpairs of bilap + kappa*(-lap), modal_split only
  EigenPairs grad_;   // eigenpairs of -lap, strong modal_split only
};

/// One step with a throwaway Integrator (convenience for tests).
State step(const State& s, const DiscreteOperators& ops, const ModelParams& p,
           const SchemeConfig& cfg);

/// Runs from t = 0 to t_end, sampling every sample_every steps (the state
/// at t = 0 is always the first sample). When alpha > 0 and the initial
/// energy is positive, every sample carries the lower/upper envelope values
/// for the given variant.
EnergyTrace simulate(const ModelParams& p, const State& init,
                     LowerVariant variant = LowerVariant::theorem);

/// Same, reusing preassembled operators (one sweep shares the grid).
EnergyTrace simulate(const ModelParams& p, const State& init,
                     const DiscreteOperators& ops,
                     LowerVariant variant = LowerVariant::theorem);

}  // namespace btbeam
