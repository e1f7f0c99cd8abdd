#pragma once

// Batch front-end shared by the `workbench` executable and the acceptance
// driver. Exit codes: 0 pass, 1 mathematical violation, 2 usage/config error.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace opmult::workbench {

inline constexpr int exit_pass = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_config = 2;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unset optionals take instance-dependent defaults in resolve().
struct RunConfig {
    std::string command;
    std::string instance = "perm";
    std::optional<std::size_t> n;
    std::size_t d = 1;
    std::optional<std::size_t> max_arity;
    std::optional<std::size_t> max_weight;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> max_total;
    std::optional<std::size_t> jacobi_total;
    std::optional<std::size_t> gap_cap;
    std::uint64_t seed = 20240601;
    std::size_t random_pairs = 100;
    std::size_t samples = 10'000;
    std::size_t exhaustive_cap = 1'000'000;
    std::string format = "ascii";
    std::optional<std::string> out;
    bool json = false;
    bool timings = false;
    bool normalized = false;
    bool strict = false;
    bool print_config = false;
    std::optional<std::size_t> stretch;
    std::optional<std::string> export_mtx;
    std::string fixture = "none";
    std::optional<std::size_t> threads;

    /// Fills every default and validates instance/command compatibility.
    /// Throws ConfigError.
    RunConfig resolve() const;

    /// Resolved settings. Thread count and output paths are runtime-only and
    /// excluded from reports unless `runtime` is set.
    nlohmann::json to_json(bool runtime = false) const;
};

/// Wraps a payload with tool version, convention hash, command and config.
nlohmann::json envelope(const RunConfig& cfg, nlohmann::json payload);

/// Runs a resolved configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (long flags only) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace opmult::workbench
