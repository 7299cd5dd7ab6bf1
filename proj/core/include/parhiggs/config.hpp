#ifndef PARHIGGS_CONFIG_HPP
#define PARHIGGS_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "parhiggs/verystable.hpp"

namespace parhiggs {

/// Config file problems: parse errors or validation failures, with one message
/// per issue.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(issues.empty() ? "invalid config" : issues.front()),
          issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Parsed and validated job description (schema parhiggs-config/1).
struct JobConfig {
    std::string name;
    std::uint64_t seed = 0;
    MarkedCurve curve;
    std::vector<int> splitting;
    std::vector<std::vector<Rational>> weights;  // per point
    bool generic_flags = false;                  // expand from seed when true
    std::vector<RatMat> explicit_flags;
    PairingForm pairing;
    std::vector<std::string> tasks;
    std::vector<ModuliDimParams> dimension_params;

    /// Bundle with flags resolved ("generic" expanded deterministically from the seed).
    ParabolicBundle bundle() const;
};

JobConfig load_config(const std::string& path);
JobConfig parse_config(const std::string& json_text, const std::string& origin);

/// Writes the bundled example corpus into `directory`; returns the file names
/// written (deterministic content, byte-identical across runs).
std::vector<std::string> emit_examples(const std::string& directory);

const std::vector<std::string>& known_tasks();

}  // namespace parhiggs

#endif
