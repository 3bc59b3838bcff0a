// SPDX-License-Identifier: Apache-2.0
#include "rfprop/geo.hpp"

#include <cmath>
#include <string>

#include "rfprop/error.hpp"

namespace rfprop {

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

} // namespace

GeoPoint::GeoPoint(double lat_deg, double lon_deg) : lat_deg_(lat_deg) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
        throw Error("latitude out of range [-90, 90]: " + std::to_string(lat_deg));
    if (!std::isfinite(lon_deg))
        throw Error("longitude is not finite");
    double lon = std::fmod(lon_deg + 180.0, 360.0);
    if (lon < 0.0) lon += 360.0;
    lon_deg_ = lon - 180.0;
}

double great_circle_distance(const GeoPoint& a, const GeoPoint& b) {
    const double phi1 = deg2rad(a.lat_deg());
    const double phi2 = deg2rad(b.lat_deg());
    const double sdphi = std::sin(deg2rad(b.lat_deg() - a.lat_deg()) / 2.0);
    const double sdlam = std::sin(deg2rad(b.lon_deg() - a.lon_deg()) / 2.0);
    const double h = sdphi * sdphi + std::cos(phi1) * std::cos(phi2) * sdlam * sdlam;
    return 2.0 * kEarthRadiusM * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

GeoPoint intermediate_point(const GeoPoint& a, const GeoPoint& b, double f) {
    if (!(f >= 0.0 && f <= 1.0))
        throw Error("interpolation fraction outside [0, 1]: " + std::to_string(f));
    if (f == 0.0 || a == b) return a;
    if (f == 1.0) return b;

    const double delta = great_circle_distance(a, b) / kEarthRadiusM;
    if (delta == 0.0) return a;
    if (kPi - delta < 1e-9)
        throw AntipodalError("endpoints are antipodal; the great circle between them is not unique");

    const double phi1 = deg2rad(a.lat_deg());
    const double lam1 = deg2rad(a.lon_deg());
    const double phi2 = deg2rad(b.lat_deg());
    const double lam2 = deg2rad(b.lon_deg());

    const double sd = std::sin(delta);
    const double wa = std::sin((1.0 - f) * delta) / sd;
    const double wb = std::sin(f * delta) / sd;

    const double x = wa * std::cos(phi1) * std::cos(lam1) + wb * std::cos(phi2) * std::cos(lam2);
    const double y = wa * std::cos(phi1) * std::sin(lam1) + wb * std::cos(phi2) * std::sin(lam2);
    const double z = wa * std::sin(phi1) + wb * std::sin(phi2);

    return GeoPoint(rad2deg(std::atan2(z, std::hypot(x, y))), rad2deg(std::atan2(y, x)));
}

SampledPath sample_path(const GeoPoint& a, const GeoPoint& b, double max_spacing_m) {
    if (!(max_spacing_m > 0.0))
        throw Error("sample spacing must be positive");
    const double d = great_circle_distance(a, b);
    if (d == 0.0)
        throw DegenerateLinkError("path endpoints coincide");

    // The backoff keeps an exact multiple of the spacing from landing in the
    // next segment count through rounding in the distance itself.
    const double ratio = d / max_spacing_m * (1.0 - 1e-12);
    long segments = static_cast<long>(std::ceil(ratio));
    if (segments < 2) segments = 2;

    SampledPath out;
    out.spacing_m = d / static_cast<double>(segments);
    out.points.reserve(static_cast<size_t>(segments) + 1);
    for (long i = 0; i <= segments; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(segments);
        out.points.push_back(intermediate_point(a, b, f));
    }
    return out;
}

} // namespace rfprop
