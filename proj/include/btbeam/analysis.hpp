#pragma once

#include <utility>
#include <vector>

#include "btbeam/envelope.hpp"
#include "btbeam/initial.hpp"
#include "btbeam/state.hpp"

namespace btbeam {

enum class DecayModel { power, exponential };

struct FitResult {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  DecayModel model = DecayModel::power;
};

/// Least-squares line on (log t, log E) over the tail of the trace. The
/// tail is the last `tail_fraction` of the positive-time samples measured
/// in log-time; early transients are excluded by construction.
FitResult fit_power_exponent(const EnergyTrace& trace,
                             double tail_fraction = 0.5);

/// Same fit on a raw (t, E) series (used by the trace overload and by
/// synthetic-series tests).
FitResult fit_power_exponent(const std::vector<double>& t,
                             const std::vector<double>& e,
                             double tail_fraction = 0.5);

/// Centered finite differences of -d(log E)/dt at interior samples.
std::vector<std::pair<double, double>> local_decay_rate(
    const EnergyTrace& trace);
std::vector<std::pair<double, double>> local_decay_rate(
    const std::vector<double>& t, const std::vector<double>& e);

struct ContainmentReport {
  double min_margin_lo = 0.0;  // min over samples of E/lower - 1
  double min_margin_hi = 0.0;  // min over samples of upper/E - 1
  double tol_lo = 0.0;
  double tol_hi = 0.0;
  std::vector<std::size_t> violating_samples;
  bool pass = false;
};

/// Per-sample envelope margins; passes iff min(m_lo) >= -tol_lo and
/// min(m_hi) >= -tol_hi. The trace and the constants must agree on
/// (alpha, q, kappa, e0).
ContainmentReport containment_report(const EnergyTrace& trace,
                                     const EnvelopeConstants& ec,
                                     double tol_lo = 0.01,
                                     double tol_hi = 0.01);

struct ConvergenceResult {
  std::vector<int> grids;
  std::vector<double> values;  // E(t_end) per grid
  std::vector<double> orders;  // observed order per consecutive grid triple
};

/// Richardson-style observed order of E(t_end) across geometrically
/// refined grids (at least three).
ConvergenceResult convergence_study(const ModelParams& p,
                                    const InitialSpec& init_kind,
                                    const std::vector<int>& grids);

/// Observed order from three values on grids with spacings h1 > h2 > h3,
/// assuming value = limit + C h^p (solves the ratio equation for p; exact
/// ratios need not be 2).
double observed_order(double v1, double v2, double v3, double h1, double h2,
                      double h3);

}  // namespace btbeam
