// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>
#include <vector>

namespace rfprop {

// All geometry runs on a sphere of mean earth radius. Good to a few parts in
// a thousand against the ellipsoid, which is well inside the error budget of
// the propagation model this feeds.
inline constexpr double kEarthRadiusM = 6371000.0;

// Meters per degree of great-circle arc.
inline constexpr double kMetersPerDegree = kEarthRadiusM * std::numbers::pi / 180.0;

// Geographic position in degrees. Longitude is normalized into [-180, 180)
// on construction; latitude outside [-90, 90] is rejected.
class GeoPoint {
public:
    GeoPoint() = default;
    GeoPoint(double lat_deg, double lon_deg);

    double lat_deg() const { return lat_deg_; }
    double lon_deg() const { return lon_deg_; }

    bool operator==(const GeoPoint&) const = default;

private:
    double lat_deg_ = 0.0;
    double lon_deg_ = 0.0;
};

// Haversine great-circle distance in meters. Exactly symmetric, and zero
// only for identical coordinate pairs.
double great_circle_distance(const GeoPoint& a, const GeoPoint& b);

// Point at fraction f (0 = a, 1 = b) along the great circle from a to b.
// Throws AntipodalError when the endpoints are antipodal, where the route
// is not unique.
GeoPoint intermediate_point(const GeoPoint& a, const GeoPoint& b, double f);

struct SampledPath {
    double spacing_m = 0.0;
    std::vector<GeoPoint> points;
};

// Evenly spaced points from a to b inclusive. The count is the smallest that
// brings the spacing to max_spacing_m or less, with a floor of three points
// so there is always an interior sample. Throws DegenerateLinkError when the
// endpoints coincide.
SampledPath sample_path(const GeoPoint& a, const GeoPoint& b, double max_spacing_m);

} // namespace rfprop
