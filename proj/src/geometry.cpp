#include "uwsa/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uwsa {

Deployment::Deployment(double radius_m) : radius_m_(radius_m)
{
    if (!std::isfinite(radius_m) || radius_m <= 0.0) {
        throw std::invalid_argument("deployment radius must be finite and positive");
    }
}

Point3 sample_position(Engine& engine, const Deployment& dep)
{
    const double cos_polar = -uniform_open01(engine);
    const double azimuth = std::numbers::pi * (2.0 * uniform_open01(engine) - 1.0);
    const double r = dep.radius_m() * std::cbrt(uniform_open01(engine));

    const double sin_polar = std::sqrt(1.0 - cos_polar * cos_polar);
    return Point3{r * sin_polar * std::cos(azimuth),
                  r * sin_polar * std::sin(azimuth),
                  r * cos_polar};
}

double distance_to_ap(const Point3& p)
{
    return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
}

} // namespace uwsa
