#pragma once

#include <string>

namespace btbeam {

/// Damping variant: frictional acts through the velocity, strong through
/// the Laplacian of the velocity.
enum class Variant { frictional, strong };

enum class Scheme { rk4, modal_split };

const char* to_string(Variant v);
const char* to_string(Scheme s);
Variant variant_from_string(const std::string& s);
Scheme scheme_from_string(const std::string& s);

/// Physical and run parameters for one simulation.
///
/// `kappa` multiplies the -Laplacian stiffness term, `alpha` the nonlocal
/// damping term, and `q` is the exponent of the nonlocal coefficient.
/// The interval is (0, length) with `n` interior grid points.
struct ModelParams {
  double kappa = 0.0;
  double alpha = 1.0;
  double q = 1.0;
  Variant variant = Variant::frictional;
  double length = 1.0;
  int n = 64;
  double dt = 1e-2;
  double t_end = 10.0;
  int sample_every = 10;
  Scheme scheme = Scheme::modal_split;
  long seed = 0;
  bool allow_low_q = false;

  bool operator==(const ModelParams&) const = default;
};

/// Checks all parameter invariants and returns the params unchanged.
/// Throws Error with the code naming the violated field. q < 1/2 is
/// rejected unless allow_low_q is set, in which case a warning is
/// emitted on stderr and the run is flagged in output metadata.
ModelParams validate_params(const ModelParams& p);

}  // namespace btbeam
