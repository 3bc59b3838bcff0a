// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rfprop/exec.hpp"
#include "rfprop/geo.hpp"

namespace rfprop {

// What the cell values mean. class_code rasters hold integer land-cover
// codes and refuse any operation that would interpolate them.
enum class RasterKind { elevation_m, height_m, class_code };

enum class ResampleMethod { bilinear, mean, max };

const char* resample_method_name(ResampleMethod m);

// Regular grid in geographic coordinates, row-major with the northernmost
// row first. Cells are square in degrees and georeferenced by the corner of
// the lower-left cell, ESRI ASCII grid convention.
struct Raster {
    int ncols = 0;
    int nrows = 0;
    double xll_deg = 0.0;
    double yll_deg = 0.0;
    double cellsize_deg = 0.0;
    double nodata = -9999.0;
    RasterKind kind = RasterKind::elevation_m;
    std::vector<double> values;

    double at(int row, int col) const { return values[static_cast<size_t>(row) * ncols + col]; }
    double& at(int row, int col) { return values[static_cast<size_t>(row) * ncols + col]; }
    bool is_nodata(double v) const { return v == nodata; }

    double west() const { return xll_deg; }
    double east() const { return xll_deg + ncols * cellsize_deg; }
    double south() const { return yll_deg; }
    double north() const { return yll_deg + nrows * cellsize_deg; }

    // True when p lies inside or on the edge of the grid extent.
    bool contains(const GeoPoint& p) const;

    GeoPoint cell_center(int row, int col) const;
};

// Reader for the ESRI ASCII grid format: five mandatory header fields
// (case-insensitive), optional NODATA_value, then ncols*nrows cell values in
// row-major order from the north-west corner. Malformed headers, non-numeric
// cells, value-count mismatches, and fractional cells in class_code rasters
// all raise ParseError.
Raster load_ascii_grid(std::istream& in, RasterKind kind = RasterKind::elevation_m);
Raster load_ascii_grid_file(const std::string& path, RasterKind kind = RasterKind::elevation_m);

// Writer producing one header field per line and one grid row per line.
// Headers are written with shortest round-trip precision, cell values with
// six significant digits, so load(write(r)) reproduces r exactly whenever
// the values carry at most six significant digits.
void write_ascii_grid(const Raster& r, std::ostream& out);
void write_ascii_grid_file(const Raster& r, const std::string& path);

// Cell whose center is nearest to p, ties toward the lower index (the
// northern row, the western column). OutOfBoundsError when p is outside the
// grid extent.
std::pair<int, int> nearest_cell(const Raster& r, const GeoPoint& p);

// Value of the nearest cell. NoDataError when that cell holds the sentinel.
double sample_nearest(const Raster& r, const GeoPoint& p);

// Bilinear interpolation between the four surrounding cell centers. Falls
// back to nearest sampling in the half-cell border band and whenever any of
// the four neighbors is nodata. KindError on class_code rasters.
double sample_bilinear(const Raster& r, const GeoPoint& p);

// Height above ground: max(0, dsm - dtm) cell by cell. Both inputs must
// share the same grid geometry; nodata in either input propagates.
Raster hag(const Raster& dsm, const Raster& dtm);

// Aggregates factor x factor blocks of cells into one output cell. Blocks
// are anchored at the lower-left corner, so partial blocks sit on the north
// and east edges. mean and max skip nodata cells (all-nodata blocks stay
// nodata); bilinear samples the input at each output cell center. class_code
// rasters only allow max.
Raster resample(const Raster& r, int factor, ResampleMethod method, Exec exec = Exec::parallel);

} // namespace rfprop
