#pragma once

#include <vector>

#include "btbeam/operators.hpp"
#include "btbeam/params.hpp"
#include "btbeam/state.hpp"

namespace btbeam {

/// Coefficient in front of alpha*q*t in the lower envelope: the theorem
/// form uses 2^{q+1}, the remark form 2^{2q+1}.
enum class LowerVariant { theorem, remark };

const char* to_string(LowerVariant v);
LowerVariant lower_variant_from_string(const std::string& s);

/// All constants entering the two-sided polynomial envelopes:
///   K(E0) = (64 d^2 + 1) / alpha^{1/(q+1)}
///           + 2^{q+1} d^2 alpha^{(2q+1)/(q+1)} E0^{2q}
///   J(E0) = (4/3)^{q+1} [ (2 E0)^{q/(q+1)} + 2 K(E0) ]^{q+1}
/// with d the discrete embedding constant ||u|| <= d ||D2 u|| and c' the
/// gradient embedding constant ||grad u||^2 <= c' ||D2 u||^2.
struct EnvelopeConstants {
  double e0 = 0.0;
  double alpha = 0.0;
  double q = 0.0;
  double kappa = 0.0;
  double d = 0.0;
  double c_prime = 0.0;
  double k_of_e0 = 0.0;
  double j_of_e0 = 0.0;
  LowerVariant lower_coeff_variant = LowerVariant::theorem;
};

/// Builds the constants from explicitly supplied embedding constants.
EnvelopeConstants make_envelope_constants(double e0, double alpha, double q,
                                          double kappa, double d,
                                          double c_prime,
                                          LowerVariant variant);

/// Builds the constants with d and c' computed from the discrete operators.
/// Throws ZeroDamping for alpha = 0 (no envelope is asserted then).
EnvelopeConstants envelope_constants(double e0, const ModelParams& p,
                                     const DiscreteOperators& ops,
                                     LowerVariant variant =
                                         LowerVariant::theorem);

/// [c alpha q t + e0^{-q}]^{-1/q}, c = 2^{q+1} or 2^{2q+1} per variant.
double lower_envelope(double t, const EnvelopeConstants& ec);

/// [(q/J) (t-1)^+ + e0^{-q}]^{-1/q}; equals e0 for t <= 1.
double upper_envelope(double t, const EnvelopeConstants& ec);

/// Non-increasing sequence phi(0), phi(1), ... on unit windows, with the
/// constant c0 multiplying the window difference.
struct NakaoInput {
  std::vector<double> phi;
  double c0 = 0.0;
  double q = 0.0;
};

/// Closed-form difference-inequality bound
/// [(q/c0) (t-1)^+ + phi(0)^{-q}]^{-1/q}.
double nakao_bound(const NakaoInput& inp, double t);

struct WindowCheck {
  double t0 = 0.0;       // window is [t0, t0+1]
  double sup_pow = 0.0;  // sampled sup of E^{q+1} over the window
  double diff = 0.0;     // E(t0) - E(t0+1)
  double ratio = 0.0;    // sup_pow / (J * diff), 0 when degenerate
  bool degenerate = false;
};

struct NakaoReport {
  std::vector<WindowCheck> windows;
  double worst_ratio = 0.0;
  int degenerate_inconsistent = 0;
  double tol = 0.0;
  bool pass = false;
};

/// Checks the window inequality sup_{[t,t+1]} E^{q+1} <= J (E(t) - E(t+1))
/// on every integer-aligned unit window covered by the trace. A window with
/// zero difference is degenerate and consistent only if its sup is zero.
NakaoReport verify_nakao_hypothesis(const EnergyTrace& trace,
                                    const EnvelopeConstants& ec,
                                    double tol = 0.05);

}  // namespace btbeam
