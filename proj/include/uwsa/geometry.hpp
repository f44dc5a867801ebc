#pragma once

#include "uwsa/random.hpp"

namespace uwsa {

/// Cartesian position in meters.  The access point sits at the origin on the
/// underside of a floating platform; water occupies z <= 0.
struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Half-ball of radius R below the access point in which devices are placed.
class Deployment
{
public:
    /// Throws std::invalid_argument unless radius_m is finite and positive.
    explicit Deployment(double radius_m);

    double radius_m() const { return radius_m_; }

private:
    double radius_m_;
};

/**
 * Draws one position uniformly over the solid half-ball {|p| <= R, z <= 0}.
 *
 * The direction is uniform on the lower unit hemisphere (z uniform on
 * (-1, 0), azimuth uniform on (-pi, pi)) and the radius is R * u^(1/3), so
 * the radial CDF is (d/R)^3.  Consumes exactly three engine outputs.
 */
Point3 sample_position(Engine& engine, const Deployment& dep);

double distance_to_ap(const Point3& p);

} // namespace uwsa
