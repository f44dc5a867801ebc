#include "uwsa/channel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace uwsa {

namespace {

// Table values are rounded to three decimals, so c = a + b holds only to 1e-3.
constexpr double kSumTolerance = 1e-3 + 1e-12;

struct PresetRow
{
    WaterType type;
    std::string_view name;
    double a, b, c;
};

constexpr std::array<PresetRow, 4> kPresets{{
    {WaterType::PureSea, "pure_sea", 0.053, 0.003, 0.056},
    {WaterType::ClearOcean, "clear_ocean", 0.069, 0.08, 0.15},
    {WaterType::CoastalOcean, "coastal_ocean", 0.088, 0.216, 0.305},
    {WaterType::TurbidHarbor, "turbid_harbor", 0.295, 1.875, 2.17},
}};

const PresetRow& row(WaterType type)
{
    for (const auto& r : kPresets) {
        if (r.type == type) {
            return r;
        }
    }
    throw std::logic_error("unknown water type");
}

} // namespace

WaterMedium WaterMedium::custom(double absorption_per_m, double scattering_per_m,
                                double extinction_per_m, std::string label)
{
    for (double v : {absorption_per_m, scattering_per_m, extinction_per_m}) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("water coefficients must be finite and non-negative");
        }
    }
    if (std::abs(extinction_per_m - (absorption_per_m + scattering_per_m)) > kSumTolerance) {
        throw std::invalid_argument(
            "extinction coefficient must equal absorption + scattering (within 1e-3 1/m)");
    }
    return WaterMedium(absorption_per_m, scattering_per_m, extinction_per_m, std::move(label));
}

WaterMedium preset(WaterType type)
{
    const auto& r = row(type);
    return WaterMedium::custom(r.a, r.b, r.c, std::string(r.name));
}

std::string_view water_type_name(WaterType type)
{
    return row(type).name;
}

std::optional<WaterType> parse_water_type(std::string_view name)
{
    for (const auto& r : kPresets) {
        if (r.name == name) {
            return r.type;
        }
    }
    return std::nullopt;
}

double gain(const WaterMedium& medium, double distance_m)
{
    if (!(distance_m >= 0.0)) {
        throw std::domain_error("distance must be non-negative");
    }
    return std::exp(-medium.extinction_per_m() * distance_m);
}

} // namespace uwsa
