#pragma once

#include "raag/median.hpp"
#include "raag/util.hpp"

#include <map>
#include <string>
#include <vector>

namespace raag {

inline constexpr const char* kToolVersion = "0.1.0";

/// Effective configuration of a run: every parameter, defaults included,
/// echoed into each artifact together with a digest of the whole map.
class RunMeta {
public:
    RunMeta(std::string subcommand) : subcommand_(std::move(subcommand)) {}

    void set(const std::string& key, const std::string& value) { params_[key] = value; }
    void set(const std::string& key, long long value) { params_[key] = std::to_string(value); }
    void set(const std::string& key, const Rat& value) { params_[key] = rat_to_string(value); }

    const std::string& subcommand() const { return subcommand_; }
    const std::map<std::string, std::string>& params() const { return params_; }

    /// FNV-1a over the canonical "k=v;" serialization.
    std::string digest() const;

    /// '#'-prefixed header lines for CSV/DOT artifacts.
    std::string comment_header(const std::string& comment_prefix = "#") const;

    /// JSON object {"tool":..., "subcommand":..., "params":{...}, "config_digest":...}.
    std::string json_meta() const;

private:
    std::string subcommand_;
    std::map<std::string, std::string> params_; // sorted keys -> deterministic digest
};

/// CSV for the divergence scan; fixed column set, rows in the given order,
/// rationals exact, triple values ';'-separated inside one cell.
std::string divergence_csv(const RunMeta& meta, const std::vector<DivergenceRow>& rows);

/// Writes text to `path`, or to stdout when the path is empty.
void write_artifact(const std::string& path, const std::string& text);

} // namespace raag
