// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "rfprop/raster.hpp"

namespace rfprop {

// The four clutter categories the propagation model distinguishes. Land
// cover products with richer legends collapse onto these.
enum class ClutterCategory {
    water_open_rural = 0,
    suburban = 1,
    urban_trees_forest = 2,
    dense_urban = 3,
};

inline constexpr int kNumClutterCategories = 4;
inline constexpr std::array<ClutterCategory, 4> kAllClutterCategories = {
    ClutterCategory::water_open_rural, ClutterCategory::suburban,
    ClutterCategory::urban_trees_forest, ClutterCategory::dense_urban};

const char* category_name(ClutterCategory c);
std::optional<ClutterCategory> category_from_name(const std::string& name);

// Representative clutter height per category, meters above ground. A
// default-constructed table carries the standard values (0, 10, 15, 20).
// Per-code overrides let one category carry different heights for different
// land-cover codes, e.g. conifer versus mixed forest.
class HeightTable {
public:
    HeightTable();

    double height(ClutterCategory c) const;
    void set_height(ClutterCategory c, double meters);

    // Height for a specific land-cover code: the code override when one is
    // registered, the category height otherwise.
    double height_for_code(int code, ClutterCategory c) const;
    void set_code_override(int code, double meters);
    const std::map<int, double>& code_overrides() const { return code_overrides_; }

private:
    std::array<double, kNumClutterCategories> heights_;
    std::map<int, double> code_overrides_;
};

// What to do with land-cover codes the scheme does not list.
enum class UnmappedPolicy { error, treat_as_open };

// Mapping from a land-cover product's integer codes to clutter categories.
struct ClutterScheme {
    std::string name;
    std::map<int, ClutterCategory> code_map;
    UnmappedPolicy unmapped_policy = UnmappedPolicy::error;
};

// Category for a code. UnmappedCodeError for unlisted codes under the error
// policy; water_open_rural under treat_as_open.
ClutterCategory map_code(const ClutterScheme& s, int code);

double default_height(const HeightTable& t, ClutterCategory c);

// Statistic of a height-above-ground raster over the cells of one category.
enum class StatKind { mean, median, p75 };

const char* stat_name(StatKind s);
std::optional<StatKind> stat_from_name(const std::string& name);

// Computes the statistic over every land-cover cell of category c whose
// center lies in the geographic intersection of the two rasters, reading the
// height raster with nearest sampling. Heights below one meter and nodata
// cells are excluded. Median and p75 use the nearest-rank rule on the sorted
// sample. GeometryDisjointError when the rasters do not overlap,
// EmptyClassError when no cell survives the filters.
double class_stat(const Raster& hag_raster, const Raster& landcover, const ClutterScheme& s,
                  ClutterCategory c, StatKind stat);

// Turns a land-cover raster into a height raster by mapping every code to
// its category and looking the height up in the table. Nodata propagates.
Raster build_height_raster(const Raster& landcover, const ClutterScheme& s, const HeightTable& t);

struct SchemeConfig {
    ClutterScheme scheme;
    HeightTable heights;
    bool has_heights = false;
};

// Scheme file format, key=value lines:
//   name=<label>
//   policy=error|open
//   code.<int>=open|suburban|trees|dense
//   height.<category>=<meters>        (optional)
//   height.code.<int>=<meters>        (optional per-code override)
SchemeConfig load_scheme(std::istream& in);
SchemeConfig load_scheme_file(const std::string& path);

// Applies height.<category> and height.code.<int> lines on top of t.
void apply_height_file(std::istream& in, HeightTable& t);
void apply_height_file_path(const std::string& path, HeightTable& t);

} // namespace rfprop
