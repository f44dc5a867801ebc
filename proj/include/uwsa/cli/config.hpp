#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uwsa/channel.hpp"
#include "uwsa/geometry.hpp"
#include "uwsa/sinr.hpp"

namespace uwsa::cli {

/// Validation or I/O failure, tagged with the offending key when there is one.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string key, const std::string& reason);

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xA10A;

/**
 * Fully resolved experiment settings.  Defaults reproduce the reference
 * numerical setup: pure sea water, R = 10 m, P_t = 100 mW, eta = 0.8,
 * N0 = 1e-21 W/Hz, B = 200 kHz, gamma_th = 0 dB.
 */
struct ExperimentConfig
{
    std::string water = "pure_sea";
    // Explicit coefficients; when set they replace the named preset.
    std::optional<double> absorption_per_m;
    std::optional<double> scattering_per_m;
    std::optional<double> extinction_per_m;

    double radius_m = 10.0;
    double tx_power_w = 0.1;
    double conversion_eff = 0.8;
    double noise_density = 1e-21;
    double bandwidth_hz = 200e3;
    double gamma_th_db = 0.0;

    unsigned users_min = 10;
    unsigned users_max = 10;
    double pa = 0.1;
    double pa_step = 0.01;

    std::uint64_t mc_trials = 100000;
    std::uint64_t slots = 100000;
    std::uint64_t points = 10000;
    std::uint64_t seed = kDefaultSeed;
    bool perfect_capture = false;

    std::string out;

    bool users_is_range() const { return users_min != users_max; }
    double gamma_th_linear() const;

    WaterMedium medium() const;
    Deployment deployment() const;
    LinkParams link() const;

    /// Space-separated key=value record of every setting that affects the
    /// output data (the output path is excluded).
    std::string describe() const;
};

using RawConfig = std::vector<std::pair<std::string, std::string>>;

/// Parses flat `key = value` text.  '#' starts a comment; blank lines are
/// ignored.  Throws ConfigError on a malformed line.
RawConfig parse_config_text(std::string_view text);

/// Reads and parses a config file.  Throws ConfigError if unreadable.
RawConfig read_config_file(const std::filesystem::path& path);

/// Applies entries in order onto the defaults (later entries win), then
/// validates.  Throws ConfigError naming the key for an unknown key, an
/// unparsable value, or an invariant violation.
ExperimentConfig parse_config(const RawConfig& entries);

/// Keys understood by parse_config().
const std::vector<std::string_view>& config_keys();

} // namespace uwsa::cli
