// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rfprop/exec.hpp"
#include "rfprop/kernel.hpp"
#include "rfprop/profile.hpp"
#include "rfprop/raster.hpp"

namespace rfprop {

struct CoverageSpec {
    GeoPoint tx;
    double tx_height_agl_m = 10.0;
    double rx_height_agl_m = 1.5;
    double freq_mhz = 0.0;
    double lat_min_deg = 0.0;
    double lon_min_deg = 0.0;
    double lat_max_deg = 0.0;
    double lon_max_deg = 0.0;
    double cell_m = 100.0;       // output cell size, converted to degrees of arc
    double max_spacing_m = 30.0; // profile sample spacing
    SampleMethod clutter_sampling = SampleMethod::nearest;
};

// Path-loss raster over the bounding box: one prediction per cell with the
// receiver at the cell center. Cells whose path cannot be evaluated (outside
// the terrain, missing data, or the degenerate cell under the transmitter)
// hold nodata. Cell values are dB.
Raster predict_grid(const Raster& terrain, const ClutterSource& clutter,
                    const CoverageSpec& spec, Exec exec = Exec::parallel);

} // namespace rfprop
