// SPDX-License-Identifier: Apache-2.0
#include "rfprop/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rfprop/error.hpp"

namespace rfprop {

void validate(const LinkSpec& link) {
    if (!(link.tx_height_agl_m > 0.0))
        throw Error("transmitter antenna height must be positive");
    if (!(link.rx_height_agl_m > 0.0))
        throw Error("receiver antenna height must be positive");
    if (!(link.freq_mhz >= kMinFreqMhz && link.freq_mhz <= kMaxFreqMhz))
        throw Error("frequency " + std::to_string(link.freq_mhz) + " MHz is outside [" +
                    std::to_string(kMinFreqMhz) + ", " + std::to_string(kMaxFreqMhz) + "]");
}

const char* regime_name(Regime r) {
    return r == Regime::line_of_sight ? "line_of_sight" : "trans_horizon";
}

double fspl(double freq_mhz, double distance_m) {
    if (!(freq_mhz > 0.0) || !(distance_m > 0.0))
        throw Error("free-space loss needs positive frequency and distance");
    return 32.44 + 20.0 * std::log10(freq_mhz) + 20.0 * std::log10(distance_m / 1000.0);
}

double knife_edge_loss(double nu) {
    if (nu <= -0.78) return 0.0;
    const double t = nu - 0.1;
    return 6.9 + 20.0 * std::log10(std::sqrt(t * t + 1.0) + t);
}

std::pair<double, Regime> bullington_loss(const PathProfile& profile, double tx_masl,
                                          double rx_masl, double freq_mhz) {
    const auto& pts = profile.points;
    if (pts.size() < 3)
        throw Error("profile needs at least three points");
    const double d = pts.back().distance_m;
    if (!(d > 0.0))
        throw Error("profile has zero length");

    const double lambda = kSpeedOfLightMps / (freq_mhz * 1e6);
    const double inv_2ae = 1.0 / (2.0 * kEffectiveEarthRadiusM);

    // Slope from the transmitter to each interior surface point, with the
    // earth bulge lifting mid-path obstacles, against the direct Tx-Rx slope.
    const double s_tr = (rx_masl - tx_masl) / d;
    double s_tim = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        const double di = pts[i].distance_m;
        const double hi = pts[i].terrain_m + pts[i].clutter_m + di * (d - di) * inv_2ae;
        s_tim = std::max(s_tim, (hi - tx_masl) / di);
    }

    double luc = 0.0;
    Regime regime;
    if (s_tim < s_tr) {
        regime = Regime::line_of_sight;
        // Highest diffraction parameter over the interior points.
        double nu_max = -std::numeric_limits<double>::infinity();
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            const double di = pts[i].distance_m;
            const double hi = pts[i].terrain_m + pts[i].clutter_m + di * (d - di) * inv_2ae;
            const double chord = (tx_masl * (d - di) + rx_masl * di) / d;
            const double nu = (hi - chord) * std::sqrt(2.0 * d / (lambda * di * (d - di)));
            nu_max = std::max(nu_max, nu);
        }
        luc = knife_edge_loss(nu_max);
    } else {
        regime = Regime::trans_horizon;
        double s_rim = -std::numeric_limits<double>::infinity();
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            const double di = pts[i].distance_m;
            const double hi = pts[i].terrain_m + pts[i].clutter_m + di * (d - di) * inv_2ae;
            s_rim = std::max(s_rim, (hi - rx_masl) / (d - di));
        }
        // Where the two horizon rays meet, the equivalent knife edge sits.
        const double denom = s_tim + s_rim;
        double d_bp = denom > 0.0 ? (rx_masl - tx_masl + s_rim * d) / denom : d * 0.5;
        d_bp = std::clamp(d_bp, d * 1e-9, d * (1.0 - 1e-9));
        const double h_eff = tx_masl + s_tim * d_bp;
        const double chord = (tx_masl * (d - d_bp) + rx_masl * d_bp) / d;
        const double nu_b = (h_eff - chord) * std::sqrt(2.0 * d / (lambda * d_bp * (d - d_bp)));
        luc = knife_edge_loss(nu_b);
    }

    // Empirical correction for the parts of the real obstruction the single
    // equivalent edge cannot represent; vanishes with the edge loss itself.
    const double total = luc + (1.0 - std::exp(-luc / 6.0)) * (10.0 + 0.02 * d / 1000.0);
    return {total, regime};
}

PredictionResult predict(const PathProfile& profile, const LinkSpec& link) {
    validate(link);
    if (profile.points.size() < 3)
        throw ProfileMismatchError("profile needs at least three points");

    const double d_profile = profile.total_distance_m();
    const double d_link = great_circle_distance(link.tx, link.rx);
    if (!(d_link > 0.0))
        throw DegenerateLinkError("link endpoints coincide");
    if (std::abs(d_profile - d_link) > 1e-3 * d_link)
        throw ProfileMismatchError("profile length disagrees with the link distance by more than 0.1%");

    const double tx_masl = profile.points.front().terrain_m + link.tx_height_agl_m;
    const double rx_masl = profile.points.back().terrain_m + link.rx_height_agl_m;

    PredictionResult res;
    res.fspl_db = fspl(link.freq_mhz, d_profile);
    const auto [diff, regime] = bullington_loss(profile, tx_masl, rx_masl, link.freq_mhz);
    res.diffraction_db = diff;
    res.regime = regime;
    res.loss_db = res.fspl_db + res.diffraction_db;
    return res;
}

} // namespace rfprop
