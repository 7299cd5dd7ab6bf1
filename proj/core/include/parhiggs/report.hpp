#ifndef PARHIGGS_REPORT_HPP
#define PARHIGGS_REPORT_HPP

#include <string>

#include "parhiggs/config.hpp"

namespace parhiggs {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "parhiggs-report/1";
inline constexpr const char* kConfigSchema = "parhiggs-config/1";

/// Executes the requested tasks in a fixed order and renders the structured
/// report as pretty-printed JSON (schema parhiggs-report/1). Rationals are
/// serialized as exact "num/den" strings; per-task failures are captured in
/// the report rather than aborting the batch. Deterministic given the config
/// and seed.
std::string run_report(const JobConfig& cfg);

/// run_report written to a file.
void write_report(const JobConfig& cfg, const std::string& out_path);

}  // namespace parhiggs

#endif
