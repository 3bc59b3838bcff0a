// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "rfprop/profile.hpp"
#include "rfprop/raster.hpp"
#include "rfprop/textio.hpp"

namespace fs = std::filesystem;
using namespace rfprop;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "rfprop_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs the installed binary through the shell; args is everything after the
// program name and may include redirections of its own.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    const fs::path out = work_dir() / ("out" + std::to_string(seq) + ".txt");
    const fs::path err = work_dir() / ("err" + std::to_string(seq) + ".txt");
    ++seq;
    const std::string cmd = env_prefix + std::string(RFPROP_BIN) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(RFPROP_DATA_DIR) + "/fixtures/" + name;
}

std::string scheme(const std::string& name) {
    return std::string(RFPROP_DATA_DIR) + "/schemes/" + name;
}

// Value of a key=value line in a command's output.
std::string kv_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
    }
    return "";
}

const std::string kFlatArgs = "--terrain " + fixture("terrain_flat.asc") +
                              " --tx-lat 45 --tx-lon -75";

} // namespace

TEST_CASE("cli: profile output reparses") {
    const RunResult r =
        run_cli("profile " + kFlatArgs + " --rx-lat 45.002697 --rx-lon -75");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("# rfprop profile", 0) == 0);
    std::istringstream in(r.out);
    const PathProfile p = read_profile_table(in);
    REQUIRE(p.points.size() == 11);
    for (const ProfilePoint& pt : p.points) {
        CHECK(pt.terrain_m == 100.0);
        CHECK(pt.clutter_m == 0.0);
    }
    CHECK(p.spacing_m == doctest::Approx(29.98928).epsilon(1e-4));
}

TEST_CASE("cli: point prediction on open flat ground") {
    const RunResult r = run_cli("predict " + kFlatArgs +
                                " --rx-lat 45.0027 --rx-lon -75 --freq 755");
    REQUIRE(r.exit_code == 0);
    CHECK(kv_value(r.out, "distance_m") == "300.226");
    CHECK(kv_value(r.out, "loss_db") == "79.55");
    CHECK(kv_value(r.out, "fspl_db") == "79.55");
    CHECK(kv_value(r.out, "diffraction_db") == "0.00");
    CHECK(kv_value(r.out, "regime") == "line_of_sight");
}

TEST_CASE("cli: clutter along the path raises the prediction") {
    // this path crosses the wooded strip in the land-cover fixture
    const std::string rx = " --rx-lat 45.008 --rx-lon -75 --freq 755 --rx-height 1.5";
    const RunResult open_run = run_cli("predict " + kFlatArgs + rx);
    const RunResult wooded = run_cli("predict " + kFlatArgs + rx + " --clutter " +
                                     fixture("landcover.asc") + " --scheme " +
                                     scheme("esa_worldcover.scheme"));
    REQUIRE(open_run.exit_code == 0);
    REQUIRE(wooded.exit_code == 0);
    // a 1.5 m receiver grazes the Fresnel zone even on open ground; the
    // woods on top add several dB more
    const double open_diff = parse_double(kv_value(open_run.out, "diffraction_db"));
    const double open_loss = parse_double(kv_value(open_run.out, "loss_db"));
    const double wooded_loss = parse_double(kv_value(wooded.out, "loss_db"));
    const double wooded_diff = parse_double(kv_value(wooded.out, "diffraction_db"));
    CHECK(open_diff >= 0.0);
    CHECK(wooded_diff > open_diff);
    CHECK(wooded_loss > open_loss);
    CHECK(kv_value(wooded.out, "fspl_db") == kv_value(open_run.out, "fspl_db"));
}

TEST_CASE("cli: grid cells agree with point predictions at their centers") {
    const fs::path grid_path = work_dir() / "grid.asc";
    const RunResult g = run_cli("grid " + kFlatArgs +
                                " --freq 755 --bbox 45.001,-75.002,45.003,-75.000 --cell 100"
                                " --out " + grid_path.string());
    REQUIRE(g.exit_code == 0);
    const Raster grid = load_ascii_grid_file(grid_path.string(), RasterKind::height_m);
    CHECK(grid.ncols >= 2);
    CHECK(grid.nrows >= 2);

    for (int row = 0; row < grid.nrows; ++row) {
        for (int col = 0; col < grid.ncols; ++col) {
            const double v = grid.at(row, col);
            REQUIRE(!grid.is_nodata(v));
            // grid values are rounded to centi-dB
            CHECK(std::fabs(v * 100.0 - std::round(v * 100.0)) < 1e-9);
        }
    }

    const GeoPoint center = grid.cell_center(1, 1);
    std::ostringstream args;
    args.precision(17);
    args << "predict " << kFlatArgs << " --freq 755 --rx-lat " << center.lat_deg()
         << " --rx-lon " << center.lon_deg();
    const RunResult p = run_cli(args.str());
    REQUIRE(p.exit_code == 0);
    const double point_loss = parse_double(kv_value(p.out, "loss_db"));
    CHECK(std::fabs(grid.at(1, 1) - point_loss) < 0.005 + 1e-9);
}

TEST_CASE("cli: grid marks cells outside the terrain as nodata") {
    const fs::path grid_path = work_dir() / "grid_edge.asc";
    const RunResult g = run_cli("grid " + kFlatArgs +
                                " --freq 755 --bbox 45.001,-74.990,45.003,-74.980 --cell 100"
                                " --out " + grid_path.string());
    REQUIRE(g.exit_code == 0);
    const Raster grid = load_ascii_grid_file(grid_path.string(), RasterKind::height_m);
    bool saw_nodata = false;
    bool saw_valid = false;
    for (const double v : grid.values) (grid.is_nodata(v) ? saw_nodata : saw_valid) = true;
    CHECK(saw_nodata);
    CHECK(saw_valid);
}

TEST_CASE("cli: evaluation output is byte-stable across runs and policies") {
    const std::string args = "evaluate --terrain " + fixture("terrain_flat.asc") +
                             " --measurements " + fixture("measurements.csv") + " --clutter " +
                             fixture("landcover.asc") + " --scheme " +
                             scheme("esa_worldcover.scheme");
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    const RunResult serial = run_cli("--serial " + args);
    const RunResult threaded = run_cli(args, "OMP_NUM_THREADS=3 ");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == serial.out);
    CHECK(a.out == threaded.out);
    CHECK(a.out.rfind("# rfprop evaluate", 0) == 0);
    CHECK(kv_value(a.out, "run.records") == "10");
    CHECK(kv_value(a.out, "run.heights") == "defaults");
    CHECK(a.out.find("dataset.ottawa_755.group=low_rx") != std::string::npos);
    CHECK(a.out.find("histogram.bin_width_db=2") != std::string::npos);
}

TEST_CASE("cli: open-ground evaluation reproduces the corpus in full") {
    const RunResult r = run_cli("evaluate --terrain " + fixture("terrain_flat.asc") +
                                " --measurements " + fixture("measurements.csv"));
    REQUIRE(r.exit_code == 0);
    CHECK(kv_value(r.out, "dataset.ottawa_755.rmse_db") == "0.00");
    CHECK(kv_value(r.out, "dataset.ottawa_3875.rmse_db") == "0.00");
    CHECK(kv_value(r.out, "dataset.nb_3599.rmse_db") == "0.00");
    CHECK(kv_value(r.out, "group.low_rx.avg_rmse_db") == "0.00");
    CHECK(kv_value(r.out, "group.high_rx.avg_rmse_db") == "0.00");
}

TEST_CASE("cli: sweep manifest walks every combination") {
    const RunResult r = run_cli("evaluate --terrain " + fixture("terrain_flat.asc") +
                                " --measurements " + fixture("measurements.csv") + " --clutter " +
                                fixture("landcover.asc") + " --scheme " +
                                scheme("esa_worldcover.scheme") + " --hag " + fixture("hag.asc") +
                                " --manifest " + fixture("sweep.manifest"));
    REQUIRE(r.exit_code == 0);
    size_t runs = 0;
    size_t pos = 0;
    while ((pos = r.out.find("run.heights=", pos)) != std::string::npos) {
        ++runs;
        pos += 1;
    }
    CHECK(runs == 9); // 3 height strategies x 3 spacings
    CHECK(r.out.find("# sweep summary") != std::string::npos);
    CHECK(r.out.find("defaults@10") != std::string::npos);
    CHECK(r.out.find("p75@100") != std::string::npos);
    // both groups appear as matrix rows
    CHECK(r.out.find("low_rx") != std::string::npos);
    CHECK(r.out.find("high_rx") != std::string::npos);

    const RunResult again = run_cli("evaluate --terrain " + fixture("terrain_flat.asc") +
                                    " --measurements " + fixture("measurements.csv") +
                                    " --clutter " + fixture("landcover.asc") + " --scheme " +
                                    scheme("esa_worldcover.scheme") + " --hag " +
                                    fixture("hag.asc") + " --manifest " +
                                    fixture("sweep.manifest"));
    CHECK(r.out == again.out);
}

TEST_CASE("cli: cluttermap writes the mapped height raster") {
    const fs::path out_default = work_dir() / "heights_default.asc";
    const fs::path out_custom = work_dir() / "heights_custom.asc";
    REQUIRE(run_cli("cluttermap --clutter " + fixture("landcover.asc") + " --scheme " +
                    scheme("esa_worldcover.scheme") + " --out " + out_default.string())
                .exit_code == 0);
    REQUIRE(run_cli("cluttermap --clutter " + fixture("landcover.asc") + " --scheme " +
                    scheme("esa_worldcover.scheme") + " --heights " +
                    std::string(RFPROP_DATA_DIR) + "/heights/example.heights --out " +
                    out_custom.string())
                .exit_code == 0);

    const Raster lc = load_ascii_grid_file(fixture("landcover.asc"), RasterKind::class_code);
    const Raster def = load_ascii_grid_file(out_default.string(), RasterKind::height_m);
    const Raster cus = load_ascii_grid_file(out_custom.string(), RasterKind::height_m);
    REQUIRE(def.ncols == lc.ncols);
    REQUIRE(def.nrows == lc.nrows);

    // forest block: standard 15 m, 18 m with the height file
    CHECK(lc.at(55, 25) == 10.0);
    CHECK(def.at(55, 25) == 15.0);
    CHECK(cus.at(55, 25) == 18.0);
    // mossy rock (code 95) maps to trees but the height file pins it to 3 m
    CHECK(lc.at(10, 3) == 95.0);
    CHECK(def.at(10, 3) == 15.0);
    CHECK(cus.at(10, 3) == 3.0);
    // water stays at zero either way, nodata stays nodata
    CHECK(lc.at(78, 40) == 80.0);
    CHECK(def.at(78, 40) == 0.0);
    CHECK(cus.at(78, 40) == 0.0);
    CHECK(lc.is_nodata(lc.at(4, 4)));
    CHECK(def.is_nodata(def.at(4, 4)));
}

TEST_CASE("cli: stats reports per-category height statistics") {
    const RunResult r = run_cli("stats --hag " + fixture("hag.asc") + " --clutter " +
                                fixture("landcover.asc") + " --scheme " +
                                scheme("esa_worldcover.scheme"));
    REQUIRE(r.exit_code == 0);
    // canopy and rooftop samples exist; nothing dense sits under the height raster
    const double trees_p75 = parse_double(kv_value(r.out, "trees.p75"));
    const double trees_med = parse_double(kv_value(r.out, "trees.median"));
    CHECK(trees_p75 >= trees_med);
    CHECK(trees_med >= 1.0);
    CHECK(parse_double(kv_value(r.out, "suburban.mean")) >= 1.0);
    CHECK(kv_value(r.out, "dense.mean") == "n/a");
    std::istringstream lines(r.out);
    std::string line;
    int stat_lines = 0;
    while (std::getline(lines, line))
        if (line.find('=') != std::string::npos) ++stat_lines;
    CHECK(stat_lines == 12);
}

TEST_CASE("cli: resample shrinks a raster from the command line") {
    const fs::path out = work_dir() / "terrain_small.asc";
    const RunResult r = run_cli("resample --in " + fixture("terrain_hills.asc") +
                                " --factor 4 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const Raster small = load_ascii_grid_file(out.string(), RasterKind::elevation_m);
    CHECK(small.ncols == 10);
    CHECK(small.nrows == 10);
    CHECK(small.cellsize_deg == doctest::Approx(0.0032).epsilon(1e-12));
}

TEST_CASE("cli: failures exit nonzero with a diagnostic") {
    SUBCASE("missing terrain file") {
        const RunResult r = run_cli("predict --terrain /nonexistent.asc --tx-lat 45 --tx-lon -75"
                                    " --rx-lat 45.002 --rx-lon -75 --freq 755");
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("rfprop: error:") != std::string::npos);
        CHECK(r.err.find("/nonexistent.asc") != std::string::npos);
    }
    SUBCASE("malformed measurement line") {
        const fs::path csv = work_dir() / "bad.csv";
        std::ofstream f(csv);
        f << "dataset,group,tx_lat,tx_lon,tx_h_agl_m,rx_lat,rx_lon,rx_h_agl_m,freq_mhz,"
             "path_loss_db\n";
        f << "a,g,45,-75,10,45.002,-75,1.5,755\n";
        f.close();
        const RunResult r = run_cli("evaluate --terrain " + fixture("terrain_flat.asc") +
                                    " --measurements " + csv.string());
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("scheme without code coverage for the raster") {
        const RunResult r = run_cli("predict " + kFlatArgs +
                                    " --rx-lat 45.008 --rx-lon -75 --freq 755 --clutter " +
                                    fixture("landcover.asc") + " --scheme " +
                                    scheme("osm_wood.scheme"));
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("is not mapped by scheme") != std::string::npos);
    }
    SUBCASE("conflicting clutter flags") {
        const RunResult heights_only =
            run_cli("predict " + kFlatArgs + " --rx-lat 45.008 --rx-lon -75 --freq 755"
                    " --heights " + std::string(RFPROP_DATA_DIR) + "/heights/example.heights");
        CHECK(heights_only.exit_code == 1);
        CHECK(heights_only.err.find("--clutter") != std::string::npos);

        const RunResult stat_no_hag =
            run_cli("predict " + kFlatArgs + " --rx-lat 45.008 --rx-lon -75 --freq 755"
                    " --clutter " + fixture("landcover.asc") + " --scheme " +
                    scheme("esa_worldcover.scheme") + " --stat mean");
        CHECK(stat_no_hag.exit_code == 1);
        CHECK(stat_no_hag.err.find("--hag") != std::string::npos);

        const RunResult factor_on_classes =
            run_cli("predict " + kFlatArgs + " --rx-lat 45.008 --rx-lon -75 --freq 755"
                    " --clutter " + fixture("landcover.asc") + " --scheme " +
                    scheme("esa_worldcover.scheme") + " --resample-factor 2");
        CHECK(factor_on_classes.exit_code == 1);
        CHECK(factor_on_classes.err.find("blend codes") != std::string::npos);
    }
    SUBCASE("unknown flag is rejected by the parser") {
        const RunResult r = run_cli("predict --no-such-flag");
        CHECK(r.exit_code != 0);
    }
}
