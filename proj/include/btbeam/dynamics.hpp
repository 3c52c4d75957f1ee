#pragma once

#include "btbeam/operators.hpp"
#include "btbeam/params.hpp"
#include "btbeam/state.hpp"

namespace btbeam {

/// Time derivatives (du, dv) of a state.
struct RhsOutput {
  Eigen::VectorXd du;
  Eigen::VectorXd dv;
};

struct LipschitzResult {
  double ratio = 0.0;
  double bound = 0.0;
};

/// (||D2 u||^2 + ||v||^2)^q. Zero exactly at the zero state.
double nonlocal_coefficient(const State& s, const DiscreteOperators& ops,
                            double q);

EnergyBreakdown energy(const State& s, const DiscreteOperators& ops,
                       double kappa);

/// du = v.
/// frictional: dv = -bilap u + kappa lap u - alpha coeff v
/// strong:     dv = -bilap u + kappa lap u + alpha coeff lap v
RhsOutput rhs(const State& s, const DiscreteOperators& ops,
              const ModelParams& p);

/// Instantaneous energy dissipation -dE/dt:
/// frictional: alpha coeff ||v||^2; strong: alpha coeff ||grad v||^2.
double dissipation_rate(const State& s, const DiscreteOperators& ops,
                        const ModelParams& p);

/// Ratio ||N(z1) - N(z2)|| / ||z1 - z2||_H of the nonlinear part
/// N(z) = (0, kappa lap u - alpha ||z||_H^{2q} v) against the bound
/// kappa + 2(2q+1) alpha r^{2q} valid on the ball ||z||_H <= r.
LipschitzResult lipschitz_ratio(const State& z1, const State& z2,
                                const DiscreteOperators& ops,
                                const ModelParams& p, double r);

}  // namespace btbeam
