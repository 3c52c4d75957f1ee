#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "btbeam/envelope.hpp"
#include "btbeam/initial.hpp"
#include "btbeam/params.hpp"

namespace btbeam {

enum class OutFormat { csv, json };

/// A fully validated run configuration. For the sweep subcommand the
/// kappa/alpha/q keys may hold arrays; `model` then carries the first
/// combination and the lists drive the cartesian product.
struct RunConfig {
  ModelParams model;
  InitialSpec initial;
  LowerVariant envelope_variant = LowerVariant::theorem;
  std::filesystem::path output_dir = ".";
  std::set<OutFormat> formats = {OutFormat::csv};
  std::vector<double> kappa_list;
  std::vector<double> alpha_list;
  std::vector<double> q_list;

  bool operator==(const RunConfig&) const = default;
};

/// Strict JSON config parser: unknown keys are fatal, every combination of
/// listed parameters passes validate_params. Defaults for omitted keys are
/// documented in the README (scheme=modal_split, dt=1e-2, sample_every=10).
RunConfig parse_config(const std::filesystem::path& path);

/// Parses from an in-memory JSON document (same strictness).
RunConfig parse_config_text(const std::string& text);

/// Serializes a RunConfig back to its JSON document form; parse_config_text
/// of the result reproduces the config exactly.
std::string emit_config(const RunConfig& cfg);

/// CLI entry: dispatches simulate | envelope | fit | verify | sweep.
/// Returns 0 on success, 1 on verification/run failure, 2 on usage error.
int run_subcommand(const std::vector<std::string>& args);

}  // namespace btbeam
