#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace uwsa {

enum class WaterType { PureSea, ClearOcean, CoastalOcean, TurbidHarbor };

/// Inherent optical properties of a water body, all in 1/m.
class WaterMedium
{
public:
    /// Validated construction of a user-defined medium.  Throws
    /// std::invalid_argument if any coefficient is negative or non-finite, or
    /// if extinction differs from absorption + scattering by more than 1e-3.
    static WaterMedium custom(double absorption_per_m, double scattering_per_m,
                              double extinction_per_m, std::string label = "custom");

    double absorption_per_m() const { return absorption_; }
    double scattering_per_m() const { return scattering_; }
    double extinction_per_m() const { return extinction_; }
    const std::string& label() const { return label_; }

private:
    WaterMedium(double a, double b, double c, std::string label)
        : absorption_(a), scattering_(b), extinction_(c), label_(std::move(label))
    {
    }

    double absorption_;
    double scattering_;
    double extinction_;
    std::string label_;
};

/// Tabulated coefficients for the four reference water types.
WaterMedium preset(WaterType type);

/// Names accepted on the command line: pure_sea, clear_ocean, coastal_ocean,
/// turbid_harbor.
std::string_view water_type_name(WaterType type);
std::optional<WaterType> parse_water_type(std::string_view name);

/// Beer-Lambert line-of-sight gain exp(-c d).  Throws std::domain_error for a
/// negative or NaN distance.
double gain(const WaterMedium& medium, double distance_m);

} // namespace uwsa
