#include "uwsa/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace uwsa::cli {

ConfigError::ConfigError(std::string key, const std::string& reason)
    : std::runtime_error(key.empty() ? reason : "'" + key + "': " + reason), key_(std::move(key))
{
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + value + "'");
    }
    if (used != value.size() || !std::isfinite(v)) {
        throw ConfigError(key, "expected a finite number, got '" + value + "'");
    }
    return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        if (!value.empty() && value.front() == '-') {
            throw std::invalid_argument("negative");
        }
        v = std::stoull(value, &used, 0);
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
    }
    if (used != value.size()) {
        throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
    }
    return v;
}

unsigned to_users(const std::string& key, const std::string& value)
{
    const auto v = to_u64(key, value);
    if (v == 0 || v > 100000) {
        throw ConfigError(key, "user count must lie in [1, 100000]");
    }
    return static_cast<unsigned>(v);
}

bool to_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError(key, "expected true or false, got '" + value + "'");
}

void apply(ExperimentConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "water") {
        cfg.water = value;
    } else if (key == "absorption_per_m") {
        cfg.absorption_per_m = to_double(key, value);
    } else if (key == "scattering_per_m") {
        cfg.scattering_per_m = to_double(key, value);
    } else if (key == "extinction_per_m") {
        cfg.extinction_per_m = to_double(key, value);
    } else if (key == "radius_m") {
        cfg.radius_m = to_double(key, value);
    } else if (key == "tx_power_w") {
        cfg.tx_power_w = to_double(key, value);
    } else if (key == "conversion_eff") {
        cfg.conversion_eff = to_double(key, value);
    } else if (key == "noise_density") {
        cfg.noise_density = to_double(key, value);
    } else if (key == "bandwidth_hz") {
        cfg.bandwidth_hz = to_double(key, value);
    } else if (key == "gamma_th_db") {
        cfg.gamma_th_db = to_double(key, value);
    } else if (key == "users") {
        // "N" or an inclusive sweep range "A:B".
        const auto colon = value.find(':');
        if (colon == std::string::npos) {
            cfg.users_min = cfg.users_max = to_users(key, value);
        } else {
            cfg.users_min = to_users(key, value.substr(0, colon));
            cfg.users_max = to_users(key, value.substr(colon + 1));
            if (cfg.users_min > cfg.users_max) {
                throw ConfigError(key, "range start exceeds range end");
            }
        }
    } else if (key == "pa") {
        cfg.pa = to_double(key, value);
    } else if (key == "pa_step") {
        cfg.pa_step = to_double(key, value);
    } else if (key == "mc_trials") {
        cfg.mc_trials = to_u64(key, value);
    } else if (key == "slots") {
        cfg.slots = to_u64(key, value);
    } else if (key == "points") {
        cfg.points = to_u64(key, value);
    } else if (key == "seed") {
        cfg.seed = to_u64(key, value);
    } else if (key == "perfect_capture") {
        cfg.perfect_capture = to_bool(key, value);
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw ConfigError(key, "unknown key");
    }
}

template <typename F>
void check(const std::string& key, F&& build)
{
    try {
        build();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
    }
}

void validate(const ExperimentConfig& cfg)
{
    const bool any_coeff = cfg.absorption_per_m || cfg.scattering_per_m || cfg.extinction_per_m;
    const bool all_coeff = cfg.absorption_per_m && cfg.scattering_per_m && cfg.extinction_per_m;
    if (any_coeff && !all_coeff) {
        throw ConfigError("extinction_per_m",
                          "explicit water coefficients need absorption_per_m, "
                          "scattering_per_m and extinction_per_m together");
    }
    if (!any_coeff && !parse_water_type(cfg.water)) {
        throw ConfigError("water", "unknown water type '" + cfg.water +
                                       "' (expected pure_sea, clear_ocean, coastal_ocean "
                                       "or turbid_harbor)");
    }
    check("extinction_per_m", [&] { (void)cfg.medium(); });
    check("radius_m", [&] { (void)cfg.deployment(); });
    if (!(cfg.tx_power_w > 0.0)) {
        throw ConfigError("tx_power_w", "transmit power must be positive");
    }
    if (!(cfg.conversion_eff > 0.0 && cfg.conversion_eff <= 1.0)) {
        throw ConfigError("conversion_eff", "conversion efficiency must lie in (0, 1]");
    }
    if (!(cfg.noise_density > 0.0)) {
        throw ConfigError("noise_density", "noise spectral density must be positive");
    }
    if (!(cfg.bandwidth_hz > 0.0)) {
        throw ConfigError("bandwidth_hz", "bandwidth must be positive");
    }
    check("gamma_th_db", [&] { (void)cfg.link(); });

    if (!(cfg.pa >= 0.0 && cfg.pa <= 1.0)) {
        throw ConfigError("pa", "activation probability must lie in [0, 1]");
    }
    if (!(cfg.pa_step > 0.0 && cfg.pa_step <= 0.5)) {
        throw ConfigError("pa_step", "grid step must lie in (0, 0.5]");
    }
    if (cfg.mc_trials == 0) {
        throw ConfigError("mc_trials", "must be at least 1");
    }
    if (cfg.slots == 0) {
        throw ConfigError("slots", "must be at least 1");
    }
    if (cfg.points == 0) {
        throw ConfigError("points", "must be at least 1");
    }
}

} // namespace

double ExperimentConfig::gamma_th_linear() const
{
    return std::pow(10.0, gamma_th_db / 10.0);
}

WaterMedium ExperimentConfig::medium() const
{
    if (absorption_per_m && scattering_per_m && extinction_per_m) {
        return WaterMedium::custom(*absorption_per_m, *scattering_per_m, *extinction_per_m);
    }
    const auto type = parse_water_type(water);
    if (!type) {
        throw std::invalid_argument("unknown water type '" + water + "'");
    }
    return preset(*type);
}

Deployment ExperimentConfig::deployment() const
{
    return Deployment(radius_m);
}

LinkParams ExperimentConfig::link() const
{
    return LinkParams(tx_power_w, conversion_eff, noise_density, bandwidth_hz, gamma_th_linear());
}

std::string ExperimentConfig::describe() const
{
    const auto m = medium();
    std::string users = users_is_range() ? fmt::format("{}:{}", users_min, users_max)
                                         : fmt::format("{}", users_min);
    return fmt::format(
        "water={} absorption_per_m={:.9g} scattering_per_m={:.9g} extinction_per_m={:.9g} "
        "radius_m={:.9g} tx_power_w={:.9g} conversion_eff={:.9g} noise_density={:.9g} "
        "bandwidth_hz={:.9g} gamma_th_db={:.9g} users={} pa={:.9g} pa_step={:.9g} "
        "mc_trials={} slots={} points={} seed={} perfect_capture={}",
        m.label(), m.absorption_per_m(), m.scattering_per_m(), m.extinction_per_m(), radius_m,
        tx_power_w, conversion_eff, noise_density, bandwidth_hz, gamma_th_db, users, pa, pa_step,
        mc_trials, slots, points, seed, perfect_capture ? "true" : "false");
}

RawConfig parse_config_text(std::string_view text)
{
    RawConfig entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", fmt::format("line {}: expected 'key = value'", line_no));
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("", fmt::format("line {}: missing key", line_no));
        }
        entries.emplace_back(std::string(key), std::string(value));
    }
    return entries;
}

RawConfig read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config", "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

ExperimentConfig parse_config(const RawConfig& entries)
{
    ExperimentConfig cfg;
    for (const auto& [key, value] : entries) {
        apply(cfg, key, value);
    }
    validate(cfg);
    return cfg;
}

const std::vector<std::string_view>& config_keys()
{
    static const std::vector<std::string_view> keys{
        "water",          "absorption_per_m", "scattering_per_m", "extinction_per_m",
        "radius_m",       "tx_power_w",       "conversion_eff",   "noise_density",
        "bandwidth_hz",   "gamma_th_db",      "users",            "pa",
        "pa_step",        "mc_trials",        "slots",            "points",
        "seed",           "perfect_capture",  "out"};
    return keys;
}

} // namespace uwsa::cli
