// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>

#include "rfprop/geo.hpp"
#include "rfprop/profile.hpp"

namespace rfprop {

inline constexpr double kSpeedOfLightMps = 299792458.0;

// Median effective earth radius, k-factor 4/3. Ray bending under average
// refraction is folded into the geometry by inflating the radius.
inline constexpr double kEffectiveEarthRadiusM = 4.0 / 3.0 * kEarthRadiusM;

inline constexpr double kMinFreqMhz = 30.0;
inline constexpr double kMaxFreqMhz = 6000.0;

struct LinkSpec {
    GeoPoint tx;
    GeoPoint rx;
    double tx_height_agl_m = 0.0;
    double rx_height_agl_m = 0.0;
    double freq_mhz = 0.0;
};

// Antenna heights must be positive and the frequency inside [30, 6000] MHz.
void validate(const LinkSpec& link);

enum class Regime { line_of_sight, trans_horizon };

const char* regime_name(Regime r);

struct PredictionResult {
    double loss_db = 0.0;        // fspl_db + diffraction_db, always
    double fspl_db = 0.0;
    double diffraction_db = 0.0;
    Regime regime = Regime::line_of_sight;
};

// Free-space path loss in dB for f in MHz and d in meters.
double fspl(double freq_mhz, double distance_m);

// Single knife-edge diffraction loss J(nu) in dB: zero at and below the
// clearance parameter -0.78, smooth and increasing above it.
double knife_edge_loss(double nu);

// Bullington construction over the terrain-plus-clutter surface with earth
// curvature at the effective radius: the profile collapses to one equivalent
// knife edge, evaluated with an empirical rounding term on top. Antenna
// heights are meters above sea level. Returns the loss (>= 0, exactly 0 on
// unobstructed paths) and whether the path was line of sight.
std::pair<double, Regime> bullington_loss(const PathProfile& profile, double tx_masl,
                                          double rx_masl, double freq_mhz);

// Full point-to-point prediction over an extracted profile. The profile's
// length has to agree with the link's endpoint distance to 0.1%, otherwise
// ProfileMismatchError.
PredictionResult predict(const PathProfile& profile, const LinkSpec& link);

} // namespace rfprop
