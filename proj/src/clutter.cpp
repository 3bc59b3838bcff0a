// SPDX-License-Identifier: Apache-2.0
#include "rfprop/clutter.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include "rfprop/error.hpp"
#include "rfprop/textio.hpp"

namespace rfprop {

const char* category_name(ClutterCategory c) {
    switch (c) {
        case ClutterCategory::water_open_rural: return "open";
        case ClutterCategory::suburban: return "suburban";
        case ClutterCategory::urban_trees_forest: return "trees";
        case ClutterCategory::dense_urban: return "dense";
    }
    return "?";
}

std::optional<ClutterCategory> category_from_name(const std::string& name) {
    for (ClutterCategory c : kAllClutterCategories)
        if (name == category_name(c)) return c;
    return std::nullopt;
}

HeightTable::HeightTable() : heights_{0.0, 10.0, 15.0, 20.0} {}

double HeightTable::height(ClutterCategory c) const {
    return heights_[static_cast<size_t>(c)];
}

void HeightTable::set_height(ClutterCategory c, double meters) {
    if (!(meters >= 0.0) || !std::isfinite(meters))
        throw Error("clutter height must be finite and nonnegative");
    heights_[static_cast<size_t>(c)] = meters;
}

double HeightTable::height_for_code(int code, ClutterCategory c) const {
    auto it = code_overrides_.find(code);
    if (it != code_overrides_.end()) return it->second;
    return height(c);
}

void HeightTable::set_code_override(int code, double meters) {
    if (!(meters >= 0.0) || !std::isfinite(meters))
        throw Error("clutter height must be finite and nonnegative");
    code_overrides_[code] = meters;
}

ClutterCategory map_code(const ClutterScheme& s, int code) {
    auto it = s.code_map.find(code);
    if (it != s.code_map.end()) return it->second;
    if (s.unmapped_policy == UnmappedPolicy::treat_as_open)
        return ClutterCategory::water_open_rural;
    throw UnmappedCodeError("land-cover code " + std::to_string(code) +
                            " is not mapped by scheme '" + s.name + "'");
}

double default_height(const HeightTable& t, ClutterCategory c) {
    return t.height(c);
}

const char* stat_name(StatKind s) {
    switch (s) {
        case StatKind::mean: return "mean";
        case StatKind::median: return "median";
        case StatKind::p75: return "p75";
    }
    return "?";
}

std::optional<StatKind> stat_from_name(const std::string& name) {
    if (name == "mean") return StatKind::mean;
    if (name == "median") return StatKind::median;
    if (name == "p75") return StatKind::p75;
    return std::nullopt;
}

namespace {

// Nearest-rank percentile of a sorted nonempty sample: the value at 1-based
// rank ceil(q * n).
double nearest_rank(const std::vector<double>& sorted, double q) {
    const double n = static_cast<double>(sorted.size());
    size_t rank = static_cast<size_t>(std::ceil(q * n));
    if (rank < 1) rank = 1;
    if (rank > sorted.size()) rank = sorted.size();
    return sorted[rank - 1];
}

// Heights under a meter are indistinguishable from bare ground in the
// elevation products this feeds on, so they are left out of the statistics.
constexpr double kMinUsableHeightM = 1.0;

} // namespace

double class_stat(const Raster& hag_raster, const Raster& landcover, const ClutterScheme& s,
                  ClutterCategory c, StatKind stat) {
    const double w = std::max(hag_raster.west(), landcover.west());
    const double e = std::min(hag_raster.east(), landcover.east());
    const double so = std::max(hag_raster.south(), landcover.south());
    const double no = std::min(hag_raster.north(), landcover.north());
    if (!(w < e) || !(so < no))
        throw GeometryDisjointError("height and land-cover rasters do not overlap");

    std::vector<double> sample;
    for (int row = 0; row < landcover.nrows; ++row) {
        for (int col = 0; col < landcover.ncols; ++col) {
            const double code_v = landcover.at(row, col);
            if (landcover.is_nodata(code_v)) continue;
            const GeoPoint ctr = landcover.cell_center(row, col);
            if (ctr.lon_deg() < w || ctr.lon_deg() > e || ctr.lat_deg() < so || ctr.lat_deg() > no)
                continue;
            if (map_code(s, static_cast<int>(std::llround(code_v))) != c) continue;
            const auto [hr, hc] = nearest_cell(hag_raster, ctr);
            const double h = hag_raster.at(hr, hc);
            if (hag_raster.is_nodata(h) || h < kMinUsableHeightM) continue;
            sample.push_back(h);
        }
    }
    if (sample.empty())
        throw EmptyClassError(std::string("no usable height samples for category '") +
                              category_name(c) + "'");

    switch (stat) {
        case StatKind::mean: {
            double acc = 0.0;
            for (double v : sample) acc += v;
            return acc / static_cast<double>(sample.size());
        }
        case StatKind::median:
            std::sort(sample.begin(), sample.end());
            return nearest_rank(sample, 0.5);
        case StatKind::p75:
            std::sort(sample.begin(), sample.end());
            return nearest_rank(sample, 0.75);
    }
    throw Error("unreachable");
}

Raster build_height_raster(const Raster& landcover, const ClutterScheme& s, const HeightTable& t) {
    if (landcover.kind != RasterKind::class_code)
        throw KindError("height rasters are built from class-code inputs");
    Raster out = landcover;
    out.kind = RasterKind::height_m;
    for (double& v : out.values) {
        if (out.is_nodata(v)) continue;
        const int code = static_cast<int>(std::llround(v));
        v = t.height_for_code(code, map_code(s, code));
    }
    return out;
}

SchemeConfig load_scheme(std::istream& in) {
    SchemeConfig cfg;
    for (const KvEntry& e : parse_kv(in)) {
        const std::string err_at = "line " + std::to_string(e.line) + ": ";
        if (e.key == "name") {
            cfg.scheme.name = e.value;
        } else if (e.key == "policy") {
            if (e.value == "error")
                cfg.scheme.unmapped_policy = UnmappedPolicy::error;
            else if (e.value == "open")
                cfg.scheme.unmapped_policy = UnmappedPolicy::treat_as_open;
            else
                throw ParseError(err_at + "policy must be 'error' or 'open', got '" + e.value + "'");
        } else if (e.key.rfind("code.", 0) == 0) {
            const int code = static_cast<int>(parse_long(e.key.substr(5)));
            const auto cat = category_from_name(e.value);
            if (!cat)
                throw ParseError(err_at + "unknown category '" + e.value + "'");
            cfg.scheme.code_map[code] = *cat;
        } else if (e.key.rfind("height.code.", 0) == 0) {
            cfg.heights.set_code_override(static_cast<int>(parse_long(e.key.substr(12))),
                                          parse_double(e.value));
            cfg.has_heights = true;
        } else if (e.key.rfind("height.", 0) == 0) {
            const auto cat = category_from_name(e.key.substr(7));
            if (!cat)
                throw ParseError(err_at + "unknown category in '" + e.key + "'");
            cfg.heights.set_height(*cat, parse_double(e.value));
            cfg.has_heights = true;
        } else {
            throw ParseError(err_at + "unknown key '" + e.key + "'");
        }
    }
    if (cfg.scheme.code_map.empty())
        throw ParseError("scheme defines no code mappings");
    return cfg;
}

SchemeConfig load_scheme_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scheme file: " + path);
    try {
        return load_scheme(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void apply_height_file(std::istream& in, HeightTable& t) {
    bool any = false;
    for (const KvEntry& e : parse_kv(in)) {
        const std::string err_at = "line " + std::to_string(e.line) + ": ";
        if (e.key.rfind("height.code.", 0) == 0) {
            t.set_code_override(static_cast<int>(parse_long(e.key.substr(12))),
                                parse_double(e.value));
            any = true;
        } else if (e.key.rfind("height.", 0) == 0) {
            const auto cat = category_from_name(e.key.substr(7));
            if (!cat)
                throw ParseError(err_at + "unknown category in '" + e.key + "'");
            t.set_height(*cat, parse_double(e.value));
            any = true;
        } else {
            throw ParseError(err_at + "unknown key '" + e.key + "'");
        }
    }
    if (!any)
        throw ParseError("height file defines no heights");
}

void apply_height_file_path(const std::string& path, HeightTable& t) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open height file: " + path);
    try {
        apply_height_file(in, t);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace rfprop
