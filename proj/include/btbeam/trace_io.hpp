#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "btbeam/envelope.hpp"
#include "btbeam/state.hpp"

namespace btbeam {

/// CSV columns, in order:
///   t,E,bilap_sq,vel_sq,grad_sq,coeff,dissipation,lower_env,upper_env
/// one header row, then one row per sample, every value printed with 12+
/// significant digits. Absent envelope values print as nan.
void write_trace_csv(const EnergyTrace& trace, const std::filesystem::path& p);

/// JSON mirror of the CSV fields plus params_snapshot and the envelope
/// constants (null when the run has none).
void write_trace_json(const EnergyTrace& trace,
                      const std::optional<EnvelopeConstants>& ec,
                      const std::filesystem::path& p);

/// Parses a CSV written by write_trace_csv. The params snapshot is not
/// stored in CSV and is left default-initialized.
EnergyTrace read_trace_csv(const std::filesystem::path& p);

/// One floating value at 12 significant digits past the leading one
/// (printf %.12e), locale-independent.
std::string format_sci(double x);

}  // namespace btbeam
