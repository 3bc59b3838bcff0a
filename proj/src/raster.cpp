// SPDX-License-Identifier: Apache-2.0
#include "rfprop/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "rfprop/error.hpp"
#include "rfprop/textio.hpp"

namespace rfprop {

const char* resample_method_name(ResampleMethod m) {
    switch (m) {
        case ResampleMethod::bilinear: return "bilinear";
        case ResampleMethod::mean: return "mean";
        case ResampleMethod::max: return "max";
    }
    return "?";
}

bool Raster::contains(const GeoPoint& p) const {
    return p.lon_deg() >= west() && p.lon_deg() <= east() &&
           p.lat_deg() >= south() && p.lat_deg() <= north();
}

GeoPoint Raster::cell_center(int row, int col) const {
    const double lon = xll_deg + (col + 0.5) * cellsize_deg;
    const double lat = yll_deg + (nrows - row - 0.5) * cellsize_deg;
    return GeoPoint(lat, lon);
}

namespace {

bool is_header_key(const std::string& low) {
    return low == "ncols" || low == "nrows" || low == "xllcorner" ||
           low == "yllcorner" || low == "cellsize" || low == "nodata_value";
}

int header_int(const std::map<std::string, double>& hdr, const std::string& key) {
    const double v = hdr.at(key);
    if (v != std::floor(v) || v < 1.0 || v > 1e9)
        throw ParseError("header field '" + key + "' must be a positive integer");
    return static_cast<int>(v);
}

} // namespace

Raster load_ascii_grid(std::istream& in, RasterKind kind) {
    std::map<std::string, double> hdr;
    std::string tok;
    bool have_first_value = false;
    double first_value = 0.0;

    while (in >> tok) {
        const std::string low = to_lower(tok);
        if (is_header_key(low)) {
            std::string val;
            if (!(in >> val))
                throw ParseError("missing value for header field '" + tok + "'");
            hdr[low] = parse_double(val);
        } else {
            try {
                first_value = parse_double(tok);
            } catch (const ParseError&) {
                throw ParseError("unexpected token '" + tok + "' in grid header");
            }
            have_first_value = true;
            break;
        }
    }

    for (const char* req : {"ncols", "nrows", "xllcorner", "yllcorner", "cellsize"})
        if (!hdr.count(req))
            throw ParseError(std::string("grid header is missing '") + req + "'");

    Raster r;
    r.ncols = header_int(hdr, "ncols");
    r.nrows = header_int(hdr, "nrows");
    r.xll_deg = hdr.at("xllcorner");
    r.yll_deg = hdr.at("yllcorner");
    r.cellsize_deg = hdr.at("cellsize");
    if (!(r.cellsize_deg > 0.0))
        throw ParseError("cellsize must be positive");
    if (auto it = hdr.find("nodata_value"); it != hdr.end()) r.nodata = it->second;
    r.kind = kind;

    const size_t expected = static_cast<size_t>(r.ncols) * static_cast<size_t>(r.nrows);
    r.values.reserve(expected);
    if (have_first_value) r.values.push_back(first_value);
    while (r.values.size() < expected && (in >> tok)) {
        try {
            r.values.push_back(parse_double(tok));
        } catch (const ParseError&) {
            throw ParseError("cell " + std::to_string(r.values.size()) + ": non-numeric value '" + tok + "'");
        }
    }
    if (r.values.size() < expected)
        throw ParseError("expected " + std::to_string(expected) + " cell values, found " +
                         std::to_string(r.values.size()));
    if (in >> tok)
        throw ParseError("expected " + std::to_string(expected) + " cell values, found more");

    if (kind == RasterKind::class_code) {
        for (size_t i = 0; i < r.values.size(); ++i) {
            const double v = r.values[i];
            if (!r.is_nodata(v) && v != std::floor(v))
                throw ParseError("cell " + std::to_string(i) + ": class code " +
                                 format_double(v) + " is not an integer");
        }
    }
    return r;
}

Raster load_ascii_grid_file(const std::string& path, RasterKind kind) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open raster file: " + path);
    try {
        return load_ascii_grid(in, kind);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_ascii_grid(const Raster& r, std::ostream& out) {
    out << "ncols " << r.ncols << "\n";
    out << "nrows " << r.nrows << "\n";
    out << "xllcorner " << format_double(r.xll_deg) << "\n";
    out << "yllcorner " << format_double(r.yll_deg) << "\n";
    out << "cellsize " << format_double(r.cellsize_deg) << "\n";
    out << "NODATA_value " << format_double(r.nodata) << "\n";
    for (int row = 0; row < r.nrows; ++row) {
        for (int col = 0; col < r.ncols; ++col) {
            if (col) out << ' ';
            out << format_sig(r.at(row, col), 6);
        }
        out << "\n";
    }
}

void write_ascii_grid_file(const Raster& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write raster file: " + path);
    write_ascii_grid(r, out);
}

std::pair<int, int> nearest_cell(const Raster& r, const GeoPoint& p) {
    if (!r.contains(p))
        throw OutOfBoundsError("point (" + format_double(p.lat_deg()) + ", " +
                               format_double(p.lon_deg()) + ") is outside the raster extent");
    // Continuous cell-center coordinates: u = 0 at the center of the west
    // column, v = 0 at the center of the north row.
    const double u = (p.lon_deg() - r.xll_deg) / r.cellsize_deg - 0.5;
    const double v = (r.north() - p.lat_deg()) / r.cellsize_deg - 0.5;
    // ceil(x - 1/2) rounds half-down, which sends boundary points to the
    // lower of the two candidate indices.
    int col = static_cast<int>(std::ceil(u - 0.5));
    int row = static_cast<int>(std::ceil(v - 0.5));
    col = std::clamp(col, 0, r.ncols - 1);
    row = std::clamp(row, 0, r.nrows - 1);
    return {row, col};
}

double sample_nearest(const Raster& r, const GeoPoint& p) {
    const auto [row, col] = nearest_cell(r, p);
    const double v = r.at(row, col);
    if (r.is_nodata(v))
        throw NoDataError("nearest cell (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") holds no data");
    return v;
}

double sample_bilinear(const Raster& r, const GeoPoint& p) {
    if (r.kind == RasterKind::class_code)
        throw KindError("bilinear sampling is undefined for class-code rasters");
    if (!r.contains(p))
        throw OutOfBoundsError("point (" + format_double(p.lat_deg()) + ", " +
                               format_double(p.lon_deg()) + ") is outside the raster extent");
    const double u = (p.lon_deg() - r.xll_deg) / r.cellsize_deg - 0.5;
    const double v = (r.north() - p.lat_deg()) / r.cellsize_deg - 0.5;
    const int c0 = static_cast<int>(std::floor(u));
    const int r0 = static_cast<int>(std::floor(v));
    if (c0 < 0 || r0 < 0 || c0 + 1 >= r.ncols || r0 + 1 >= r.nrows)
        return sample_nearest(r, p);
    const double v00 = r.at(r0, c0);
    const double v01 = r.at(r0, c0 + 1);
    const double v10 = r.at(r0 + 1, c0);
    const double v11 = r.at(r0 + 1, c0 + 1);
    if (r.is_nodata(v00) || r.is_nodata(v01) || r.is_nodata(v10) || r.is_nodata(v11))
        return sample_nearest(r, p);
    // nested lerps: exact for constant inputs, which the plain weighted sum
    // is not once the four weights round
    const double fx = u - c0;
    const double fy = v - r0;
    const double top = v00 + fx * (v01 - v00);
    const double bottom = v10 + fx * (v11 - v10);
    return top + fy * (bottom - top);
}

Raster hag(const Raster& dsm, const Raster& dtm) {
    const bool same = dsm.ncols == dtm.ncols && dsm.nrows == dtm.nrows &&
                      std::abs(dsm.xll_deg - dtm.xll_deg) <= 1e-9 &&
                      std::abs(dsm.yll_deg - dtm.yll_deg) <= 1e-9 &&
                      std::abs(dsm.cellsize_deg - dtm.cellsize_deg) <= 1e-9;
    if (!same)
        throw GeometryMismatchError("surface and terrain rasters do not share grid geometry");
    Raster out = dsm;
    out.kind = RasterKind::height_m;
    for (size_t i = 0; i < out.values.size(); ++i) {
        if (dsm.is_nodata(dsm.values[i]) || dtm.is_nodata(dtm.values[i]))
            out.values[i] = out.nodata;
        else
            out.values[i] = std::max(0.0, dsm.values[i] - dtm.values[i]);
    }
    return out;
}

Raster resample(const Raster& r, int factor, ResampleMethod method, Exec exec) {
    if (factor < 2)
        throw Error("resample factor must be at least 2");
    if (factor > r.ncols || factor > r.nrows)
        throw FactorTooLargeError("resample factor " + std::to_string(factor) +
                                  " exceeds the grid size " + std::to_string(r.ncols) + "x" +
                                  std::to_string(r.nrows));
    if (r.kind == RasterKind::class_code && method != ResampleMethod::max)
        throw KindError("class-code rasters can only be resampled with max");

    Raster out;
    out.ncols = (r.ncols + factor - 1) / factor;
    out.nrows = (r.nrows + factor - 1) / factor;
    out.xll_deg = r.xll_deg;
    out.yll_deg = r.yll_deg;
    out.cellsize_deg = r.cellsize_deg * factor;
    out.nodata = r.nodata;
    out.kind = r.kind;
    out.values.assign(static_cast<size_t>(out.ncols) * out.nrows, out.nodata);

    const std::int64_t total = static_cast<std::int64_t>(out.ncols) * out.nrows;
    detail::for_each_index(total, exec, [&](std::int64_t idx) {
        const int orow = static_cast<int>(idx / out.ncols);
        const int ocol = static_cast<int>(idx % out.ncols);

        if (method == ResampleMethod::bilinear) {
            try {
                out.values[idx] = sample_bilinear(r, out.cell_center(orow, ocol));
            } catch (const Error&) {
                // center outside the input extent or over nodata: leave nodata
            }
            return;
        }

        // Blocks count from the south-west corner; the output row index
        // counts from the north, hence the flip.
        const int block_s = out.nrows - 1 - orow;
        const int s0 = block_s * factor;
        const int s1 = std::min(s0 + factor, r.nrows);
        const int c0 = ocol * factor;
        const int c1 = std::min(c0 + factor, r.ncols);

        double acc = method == ResampleMethod::max ? -std::numeric_limits<double>::infinity() : 0.0;
        long n = 0;
        for (int s = s0; s < s1; ++s) {
            const int irow = r.nrows - 1 - s;
            for (int c = c0; c < c1; ++c) {
                const double v = r.at(irow, c);
                if (r.is_nodata(v)) continue;
                if (method == ResampleMethod::max)
                    acc = std::max(acc, v);
                else
                    acc += v;
                ++n;
            }
        }
        if (n > 0)
            out.values[idx] = method == ResampleMethod::max ? acc : acc / static_cast<double>(n);
    });
    return out;
}

} // namespace rfprop
