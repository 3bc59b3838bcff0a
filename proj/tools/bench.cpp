// SPDX-License-Identifier: Apache-2.0
//
// Times the parallel kernels against the serial reference on a synthetic
// scene and checks that both produce bitwise identical results. Exits
// nonzero on any mismatch. --scale stretches or shrinks the workload.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "rfprop/coverage.hpp"
#include "rfprop/eval.hpp"
#include "rfprop/kernel.hpp"
#include "rfprop/profile.hpp"
#include "rfprop/raster.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace rfprop;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

Raster make_terrain(int n) {
    Raster r;
    r.ncols = r.nrows = n;
    r.xll_deg = -75.1;
    r.yll_deg = 44.9;
    r.cellsize_deg = 0.2 / n;
    r.kind = RasterKind::elevation_m;
    r.values.resize(static_cast<size_t>(n) * n);
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col)
            r.at(row, col) = 150.0 + 40.0 * std::sin(col * 0.11) * std::cos(row * 0.07);
    return r;
}

Raster make_clutter_raster(int n) {
    Raster r;
    r.ncols = r.nrows = n;
    r.xll_deg = -75.1;
    r.yll_deg = 44.9;
    r.cellsize_deg = 0.2 / n;
    r.kind = RasterKind::height_m;
    r.values.resize(static_cast<size_t>(n) * n);
    unsigned state = 12345;
    for (double& v : r.values) {
        state = state * 1664525u + 1013904223u;
        const unsigned m = state >> 16;
        v = (m % 7 == 0) ? 5.0 + (m % 160) / 10.0 : 0.0;
    }
    return r;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    bool identical;
};

} // namespace

int main(int argc, char** argv) {
    double scale = 1.0;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--scale" && i + 1 < argc) scale = std::atof(argv[++i]);
    }
    if (!(scale > 0.0)) scale = 1.0;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    const int terrain_n = 160;
    const Raster terrain = make_terrain(terrain_n);
    const ClutterSource clutter = ClutterSource::height_raster(make_clutter_raster(terrain_n * 2));

    std::vector<Row> rows;

    {
        CoverageSpec spec;
        spec.tx = GeoPoint(45.0, -75.0);
        spec.tx_height_agl_m = 30.0;
        spec.rx_height_agl_m = 1.5;
        spec.freq_mhz = 900.0;
        spec.lat_min_deg = 44.95;
        spec.lat_max_deg = 44.95 + 0.09 * scale;
        spec.lon_min_deg = -75.05;
        spec.lon_max_deg = -75.05 + 0.09 * scale;
        spec.cell_m = 200.0;
        spec.max_spacing_m = 60.0;

        auto t0 = clock_type::now();
        const Raster serial = predict_grid(terrain, clutter, spec, Exec::serial);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const Raster parallel = predict_grid(terrain, clutter, spec, Exec::parallel);
        const double t_parallel = ms_since(t0);
        rows.push_back({"predict_grid", t_serial, t_parallel,
                        bitwise_equal(serial.values, parallel.values)});
    }

    {
        std::vector<MeasurementRecord> records;
        const long n_rec = std::lround(600 * scale) + 4;
        unsigned state = 99;
        for (long i = 0; i < n_rec; ++i) {
            state = state * 1664525u + 1013904223u;
            MeasurementRecord r;
            r.dataset_id = "set_" + std::to_string(i % 5);
            r.group_id = i % 5 < 3 ? "g0" : "g1";
            r.tx = GeoPoint(45.0, -75.0);
            r.rx = GeoPoint(44.96 + (state % 997) * 8e-5, -75.04 + (state % 1009) * 7e-5);
            r.tx_height_agl_m = 30.0;
            r.rx_height_agl_m = 3.0;
            r.freq_mhz = 450.0 + (state % 5) * 700.0;
            r.measured_loss_db = 120.0 + (state % 400) / 10.0;
            records.push_back(std::move(r));
        }
        EvalSettings settings;
        settings.max_spacing_m = 60.0;

        auto t0 = clock_type::now();
        const EvalReport serial = run_evaluation(records, terrain, clutter, settings, Exec::serial);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const EvalReport parallel =
            run_evaluation(records, terrain, clutter, settings, Exec::parallel);
        const double t_parallel = ms_since(t0);

        bool same = serial.per_dataset.size() == parallel.per_dataset.size();
        for (size_t i = 0; same && i < serial.per_dataset.size(); ++i) {
            const auto& a = serial.per_dataset[i];
            const auto& b = parallel.per_dataset[i];
            same = a.key == b.key && a.count == b.count &&
                   std::memcmp(&a.stats, &b.stats, sizeof a.stats) == 0;
        }
        same = same && serial.group_avg_rmse == parallel.group_avg_rmse;
        rows.push_back({"run_evaluation", t_serial, t_parallel, same});
    }

    {
        const int n = std::max(360, static_cast<int>(1800 * scale));
        const Raster big = make_clutter_raster(n);
        auto t0 = clock_type::now();
        const Raster serial = resample(big, 3, ResampleMethod::mean, Exec::serial);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const Raster parallel = resample(big, 3, ResampleMethod::mean, Exec::parallel);
        const double t_parallel = ms_since(t0);
        rows.push_back({"resample_mean", t_serial, t_parallel,
                        bitwise_equal(serial.values, parallel.values)});
    }

    std::printf("%-16s %11s %13s %9s %10s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
                "identical");
    bool all_ok = true;
    for (const Row& r : rows) {
        std::printf("%-16s %11.1f %13.1f %8.2fx %10s\n", r.name, r.serial_ms, r.parallel_ms,
                    r.parallel_ms > 0.0 ? r.serial_ms / r.parallel_ms : 0.0,
                    r.identical ? "yes" : "NO");
        all_ok = all_ok && r.identical;
    }
    if (!all_ok) {
        std::printf("FAIL: parallel results differ from the serial reference\n");
        return 1;
    }
    return 0;
}
