// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "rfprop/error.hpp"
#include "rfprop/kernel.hpp"

using namespace rfprop;

namespace {

// Evenly spaced profile over flat ground at sea level with one optional
// clutter obstacle; the workhorse for exercising the diffraction kernel.
PathProfile flat_profile(int n_points, double spacing_m, int obstacle_index = -1,
                         double obstacle_m = 0.0) {
    PathProfile p;
    p.spacing_m = spacing_m;
    p.points.resize(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        p.points[static_cast<size_t>(i)].distance_m = i * spacing_m;
        p.points[static_cast<size_t>(i)].terrain_m = 0.0;
        p.points[static_cast<size_t>(i)].clutter_m = i == obstacle_index ? obstacle_m : 0.0;
    }
    return p;
}

} // namespace

TEST_CASE("free-space loss reference values") {
    CHECK(fspl(1.0, 1000.0) == 32.44);
    CHECK(fspl(755.0, 1000.0) == doctest::Approx(89.99893903258376).epsilon(1e-14));
    CHECK(fspl(3875.0, 10000.0) == doctest::Approx(124.20543413684658).epsilon(1e-14));
    // doubling either argument adds 20*log10(2)
    const double six = 6.020599913279624;
    CHECK(fspl(900.0, 5000.0) - fspl(900.0, 2500.0) == doctest::Approx(six).epsilon(1e-12));
    CHECK(fspl(1800.0, 5000.0) - fspl(900.0, 5000.0) == doctest::Approx(six).epsilon(1e-12));
    CHECK_THROWS_AS(fspl(0.0, 1000.0), Error);
    CHECK_THROWS_AS(fspl(755.0, 0.0), Error);
    CHECK_THROWS_AS(fspl(-755.0, 1000.0), Error);
}

TEST_CASE("knife-edge loss curve") {
    CHECK(knife_edge_loss(-0.78) == 0.0);
    CHECK(knife_edge_loss(-5.0) == 0.0);
    CHECK(knife_edge_loss(-0.7799999) > 0.0);
    CHECK(knife_edge_loss(0.0) == doctest::Approx(6.032852208563606).epsilon(1e-14));
    CHECK(knife_edge_loss(1.0) == doctest::Approx(13.925728934959924).epsilon(1e-14));

    // nondecreasing across the whole useful range
    double prev = knife_edge_loss(-1.0);
    for (double nu = -1.0; nu <= 5.0; nu += 0.01) {
        const double cur = knife_edge_loss(nu);
        CHECK(cur >= prev);
        prev = cur;
    }
    // deep shadow keeps growing roughly 20 dB per decade of nu
    CHECK(knife_edge_loss(100.0) - knife_edge_loss(10.0) == doctest::Approx(20.0).epsilon(1e-2));
}

TEST_CASE("unobstructed path has exactly zero diffraction loss") {
    const auto [loss, regime] = bullington_loss(flat_profile(41, 50.0), 30.0, 30.0, 1000.0);
    CHECK(loss == 0.0);
    CHECK(regime == Regime::line_of_sight);
    CHECK(regime_name(regime) == std::string("line_of_sight"));
}

TEST_CASE("single mid-path knife edge matches the frozen reference") {
    // 2 km flat link, both antennas 30 m above sea level, a 30 m obstacle at
    // the exact midpoint, 1000 MHz
    const PathProfile p = flat_profile(41, 50.0, 20, 30.0);
    const auto [loss, regime] = bullington_loss(p, 30.0, 30.0, 1000.0);
    CHECK(regime == Regime::trans_horizon);
    CHECK(regime_name(regime) == std::string("trans_horizon"));
    CHECK(loss == doctest::Approx(12.494103717008382).epsilon(1e-12));
    // the same geometry with the earth bulge ignored collapses to a grazing
    // knife edge; the bulge is worth under a tenth of a dB here
    CHECK(std::fabs(loss - 12.399510679599413) < 0.15);
}

TEST_CASE("line of sight with grazing clearance still loses energy") {
    // obstacle 2 m below the direct ray: inside the first Fresnel zone
    const PathProfile p = flat_profile(41, 50.0, 20, 28.0);
    const auto [loss, regime] = bullington_loss(p, 30.0, 30.0, 1000.0);
    CHECK(regime == Regime::line_of_sight);
    CHECK(loss > 0.0);
    CHECK(loss < 12.494103717008382);
}

TEST_CASE("raising the obstacle never lowers the loss") {
    double prev = -1.0;
    for (double h : {0.0, 10.0, 20.0, 28.0, 30.0, 33.0, 40.0, 60.0, 100.0}) {
        const auto [loss, regime] = bullington_loss(flat_profile(41, 50.0, 20, h), 30.0, 30.0,
                                                    1000.0);
        CHECK(loss >= prev);
        prev = loss;
    }
    // and so does raising the frequency once the edge obstructs
    const PathProfile p = flat_profile(41, 50.0, 20, 40.0);
    double prev_f = -1.0;
    for (double f : {100.0, 300.0, 900.0, 2000.0, 5800.0}) {
        const auto [loss, regime] = bullington_loss(p, 30.0, 30.0, f);
        CHECK(loss > prev_f);
        prev_f = loss;
    }
}

TEST_CASE("earth bulge alone can obstruct a long flat link") {
    // 60 km of perfectly flat ground, antennas 10 m up: the horizon cuts the
    // path even though no terrain feature does
    const PathProfile p = flat_profile(121, 500.0);
    const auto [loss, regime] = bullington_loss(p, 10.0, 10.0, 600.0);
    CHECK(regime == Regime::trans_horizon);
    CHECK(loss > 0.0);
    // mid-path bulge at the effective radius: d^2/(8*ae), about 53 m
    const double bulge = 60000.0 * 60000.0 / (8.0 * kEffectiveEarthRadiusM);
    CHECK(bulge == doctest::Approx(52.97).epsilon(1e-3));
}

TEST_CASE("bullington input validation") {
    CHECK_THROWS_AS(bullington_loss(flat_profile(2, 50.0), 30.0, 30.0, 1000.0), Error);
    PathProfile zero = flat_profile(3, 0.0);
    CHECK_THROWS_AS(bullington_loss(zero, 30.0, 30.0, 1000.0), Error);
}

TEST_CASE("link validation bounds") {
    LinkSpec link;
    link.tx = GeoPoint(45.0, -75.0);
    link.rx = GeoPoint(45.01, -75.0);
    link.tx_height_agl_m = 10.0;
    link.rx_height_agl_m = 1.5;
    link.freq_mhz = 755.0;
    CHECK_NOTHROW(validate(link));

    LinkSpec bad = link;
    bad.tx_height_agl_m = 0.0;
    CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("transmitter"), Error);
    bad = link;
    bad.rx_height_agl_m = -1.0;
    CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("receiver"), Error);
    bad = link;
    bad.freq_mhz = 29.999;
    CHECK_THROWS_AS(validate(bad), Error);
    bad.freq_mhz = 6000.001;
    CHECK_THROWS_AS(validate(bad), Error);
    bad.freq_mhz = 30.0;
    CHECK_NOTHROW(validate(bad));
    bad.freq_mhz = 6000.0;
    CHECK_NOTHROW(validate(bad));
}

TEST_CASE("prediction over a clear profile is pure free-space loss") {
    const Raster terrain = load_ascii_grid_file(
        std::string(RFPROP_DATA_DIR) + "/fixtures/terrain_flat.asc", RasterKind::elevation_m);
    LinkSpec link;
    link.tx = GeoPoint(45.0, -75.0);
    link.rx = GeoPoint(45.002697, -75.0);
    link.tx_height_agl_m = 10.0;
    link.rx_height_agl_m = 10.0;
    link.freq_mhz = 755.0;

    const PathProfile p =
        extract_profile(terrain, ClutterSource::none(), link.tx, link.rx, 30.0);
    const PredictionResult res = predict(p, link);
    CHECK(res.diffraction_db == 0.0);
    CHECK(res.regime == Regime::line_of_sight);
    CHECK(res.fspl_db == fspl(link.freq_mhz, p.total_distance_m()));
    CHECK(res.loss_db == res.fspl_db);
}

TEST_CASE("an obstacle turns up in the total loss") {
    LinkSpec link;
    link.tx = GeoPoint(45.0, -75.0);
    link.rx = GeoPoint(45.002697, -75.0);
    link.tx_height_agl_m = 10.0;
    link.rx_height_agl_m = 10.0;
    link.freq_mhz = 755.0;

    const Raster terrain = load_ascii_grid_file(
        std::string(RFPROP_DATA_DIR) + "/fixtures/terrain_flat.asc", RasterKind::elevation_m);
    const PathProfile clear =
        extract_profile(terrain, ClutterSource::none(), link.tx, link.rx, 30.0);

    PathProfile walled = clear;
    walled.points[walled.points.size() / 2].clutter_m = 25.0;
    const PredictionResult a = predict(clear, link);
    const PredictionResult b = predict(walled, link);
    CHECK(b.regime == Regime::trans_horizon);
    CHECK(b.diffraction_db > 0.0);
    CHECK(b.loss_db > a.loss_db);
    CHECK(b.loss_db == b.fspl_db + b.diffraction_db);
    CHECK(b.fspl_db == a.fspl_db);
}

TEST_CASE("prediction rejects inconsistent inputs") {
    LinkSpec link;
    link.tx = GeoPoint(45.0, -75.0);
    link.rx = GeoPoint(45.002697, -75.0);
    link.tx_height_agl_m = 10.0;
    link.rx_height_agl_m = 10.0;
    link.freq_mhz = 755.0;

    SUBCASE("too few points") {
        PathProfile p = flat_profile(2, 150.0);
        CHECK_THROWS_AS(predict(p, link), ProfileMismatchError);
    }
    SUBCASE("profile length disagrees with the endpoints") {
        PathProfile p = flat_profile(11, 40.0); // 400 m profile for a 300 m link
        CHECK_THROWS_AS(predict(p, link), ProfileMismatchError);
    }
    SUBCASE("coincident endpoints") {
        PathProfile p = flat_profile(11, 30.0);
        LinkSpec degenerate = link;
        degenerate.rx = degenerate.tx;
        CHECK_THROWS_AS(predict(p, degenerate), DegenerateLinkError);
    }
    SUBCASE("invalid link parameters surface before any math") {
        PathProfile p = flat_profile(2, 150.0);
        LinkSpec bad = link;
        bad.freq_mhz = 10.0;
        CHECK_THROWS_WITH_AS(predict(p, bad), doctest::Contains("frequency"), Error);
    }
}

TEST_CASE("antenna heights enter above local terrain") {
    // same geometry, terrain shifted up 200 m: identical diffraction, fspl
    // unchanged, so the entire result matches
    LinkSpec link;
    link.tx = GeoPoint(45.0, -75.0);
    link.rx = GeoPoint(45.002697, -75.0);
    link.tx_height_agl_m = 10.0;
    link.rx_height_agl_m = 10.0;
    link.freq_mhz = 755.0;

    PathProfile low = flat_profile(11, 29.989279842093464, 5, 25.0);
    PathProfile high = low;
    for (ProfilePoint& pt : high.points) pt.terrain_m += 200.0;

    const PredictionResult a = predict(low, link);
    const PredictionResult b = predict(high, link);
    // exact in real arithmetic; the shift costs a few ulps in the differences
    CHECK(a.loss_db == doctest::Approx(b.loss_db).epsilon(1e-9));
    CHECK(a.diffraction_db == doctest::Approx(b.diffraction_db).epsilon(1e-9));
    CHECK(a.regime == b.regime);
}
