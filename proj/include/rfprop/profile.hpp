// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "rfprop/geo.hpp"
#include "rfprop/raster.hpp"

namespace rfprop {

enum class SampleMethod { nearest, bilinear };

const char* sample_method_name(SampleMethod m);
std::optional<SampleMethod> sample_method_from_name(const std::string& name);

// Where representative clutter heights along a path come from: nowhere (bare
// terrain), or a height raster, which may be a canopy model, a height-above-
// ground product, or a height map derived from land cover.
class ClutterSource {
public:
    static ClutterSource none() { return ClutterSource{}; }
    static ClutterSource height_raster(Raster r);

    // Null when the source is none.
    const Raster* raster() const { return raster_ ? &*raster_ : nullptr; }

private:
    ClutterSource() = default;
    std::optional<Raster> raster_;
};

struct ProfilePoint {
    double distance_m = 0.0; // along-path distance from the transmitter
    double terrain_m = 0.0;  // ground elevation
    double clutter_m = 0.0;  // representative clutter height above ground
};

struct PathProfile {
    double spacing_m = 0.0;
    std::vector<ProfilePoint> points;

    double total_distance_m() const {
        return points.empty() ? 0.0 : points.back().distance_m;
    }
};

// Builds the evenly spaced terrain and clutter profile between two points.
// Terrain is always read with bilinear interpolation and must cover the
// whole path; missing terrain is an error. Clutter is read with the given
// method; outside clutter coverage, and over clutter nodata, the height is
// zero, and it is forced to zero at the two terminal points so that antennas
// never sit on top of their own obstruction.
PathProfile extract_profile(const Raster& terrain, const ClutterSource& clutter,
                            const GeoPoint& tx, const GeoPoint& rx, double max_spacing_m,
                            SampleMethod clutter_sampling = SampleMethod::nearest);

// terrain_m + clutter_m per point: the surface the diffraction model sees.
std::vector<double> profile_surface(const PathProfile& p);

// Three-column text table (distance, terrain, clutter), '#' comment header.
void write_profile_table(const PathProfile& p, std::ostream& out);
PathProfile read_profile_table(std::istream& in);

} // namespace rfprop
