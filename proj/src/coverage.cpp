// SPDX-License-Identifier: Apache-2.0
#include "rfprop/coverage.hpp"

#include <cmath>

#include "rfprop/error.hpp"

namespace rfprop {

Raster predict_grid(const Raster& terrain, const ClutterSource& clutter,
                    const CoverageSpec& spec, Exec exec) {
    if (!(spec.lat_max_deg > spec.lat_min_deg) || !(spec.lon_max_deg > spec.lon_min_deg))
        throw Error("coverage bounding box is empty");
    if (!(spec.cell_m > 0.0))
        throw Error("coverage cell size must be positive");
    if (!(spec.max_spacing_m > 0.0))
        throw Error("profile sample spacing must be positive");
    LinkSpec probe;
    probe.tx = spec.tx;
    probe.tx_height_agl_m = spec.tx_height_agl_m;
    probe.rx_height_agl_m = spec.rx_height_agl_m;
    probe.freq_mhz = spec.freq_mhz;
    validate(probe);

    Raster out;
    out.cellsize_deg = spec.cell_m / kMetersPerDegree;
    out.ncols = std::max(1, static_cast<int>(std::ceil(
                                (spec.lon_max_deg - spec.lon_min_deg) / out.cellsize_deg - 1e-9)));
    out.nrows = std::max(1, static_cast<int>(std::ceil(
                                (spec.lat_max_deg - spec.lat_min_deg) / out.cellsize_deg - 1e-9)));
    out.xll_deg = spec.lon_min_deg;
    out.yll_deg = spec.lat_min_deg;
    out.kind = RasterKind::height_m;
    out.values.assign(static_cast<size_t>(out.ncols) * out.nrows, out.nodata);

    const std::int64_t total = static_cast<std::int64_t>(out.ncols) * out.nrows;
    detail::for_each_index(total, exec, [&](std::int64_t idx) {
        const int row = static_cast<int>(idx / out.ncols);
        const int col = static_cast<int>(idx % out.ncols);
        try {
            LinkSpec link = probe;
            link.rx = out.cell_center(row, col);
            const PathProfile prof = extract_profile(terrain, clutter, link.tx, link.rx,
                                                     spec.max_spacing_m, spec.clutter_sampling);
            out.values[idx] = predict(prof, link).loss_db;
        } catch (const Error&) {
            // unreachable cell: left as nodata
        }
    });
    return out;
}

} // namespace rfprop
