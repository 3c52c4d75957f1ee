#pragma once

#include <string>

#include "btbeam/operators.hpp"
#include "btbeam/state.hpp"

namespace btbeam {

enum class InitialKind { sin_sq_mode, eigenmode, from_file };

const char* to_string(InitialKind k);
InitialKind initial_kind_from_string(const std::string& s);

/// Initial-condition descriptor. `k` and `amp` apply to the mode-based
/// kinds; `path` names a JSON file {"u": [...], "v": [...]} for from_file.
struct InitialSpec {
  InitialKind kind = InitialKind::sin_sq_mode;
  int k = 1;
  double amp = 0.1;
  std::string path;

  bool operator==(const InitialSpec&) const = default;
};

/// Builds a clamped-compatible initial state on the given grid.
///
/// sin_sq_mode: u(x) = amp * sin^2(k pi x / L), v = 0.
/// eigenmode:   u = amp * (k-th bilaplacian eigenvector, scaled so that
///              ||D2 u|| = amp), v = 0.
/// from_file:   u, v read from `path`; lengths must match the grid.
State make_initial(const InitialSpec& spec, const DiscreteOperators& ops);

}  // namespace btbeam
