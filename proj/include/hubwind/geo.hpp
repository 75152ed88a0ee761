#pragma once

#include <cmath>
#include <stdexcept>

namespace hubwind {

/// Planar location in km (equirectangular projection about a reference point).
struct GeoLocation {
    double x_km = 0.0;
    double y_km = 0.0;
};

inline double euclidean_distance(const GeoLocation& a, const GeoLocation& b) {
    return std::hypot(a.x_km - b.x_km, a.y_km - b.y_km);
}

/// Converts lon/lat (degrees) to planar km about a reference point.
/// Adequate at the ~400 km national scale this project targets.
class EquirectangularProjection {
public:
    EquirectangularProjection(double ref_lon_deg, double ref_lat_deg)
        : ref_lon_(ref_lon_deg), ref_lat_(ref_lat_deg) {
        if (!std::isfinite(ref_lon_deg) || !std::isfinite(ref_lat_deg))
            throw std::invalid_argument("projection reference must be finite");
    }

    GeoLocation to_plane(double lon_deg, double lat_deg) const {
        constexpr double kEarthRadiusKm = 6371.0;
        constexpr double kDegToRad = M_PI / 180.0;
        const double cos_ref = std::cos(ref_lat_ * kDegToRad);
        return GeoLocation{
            kEarthRadiusKm * cos_ref * (lon_deg - ref_lon_) * kDegToRad,
            kEarthRadiusKm * (lat_deg - ref_lat_) * kDegToRad,
        };
    }

    double ref_lon() const { return ref_lon_; }
    double ref_lat() const { return ref_lat_; }

private:
    double ref_lon_;
    double ref_lat_;
};

}  // namespace hubwind
