// SPDX-License-Identifier: Apache-2.0
//
// rfprop: point-to-point and area path-loss prediction over terrain and
// clutter geodata, plus the data-preparation and evaluation commands around
// it. Every command reads ESRI ASCII grids and plain text tables and writes
// to stdout unless --out is given.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rfprop/clutter.hpp"
#include "rfprop/coverage.hpp"
#include "rfprop/error.hpp"
#include "rfprop/eval.hpp"
#include "rfprop/kernel.hpp"
#include "rfprop/profile.hpp"
#include "rfprop/raster.hpp"
#include "rfprop/textio.hpp"

namespace {

using namespace rfprop;

// Options shared by every command that can take clutter into account.
struct ClutterOpts {
    std::string clutter_path;
    std::string scheme_path;
    std::string heights_path;
    std::string stat;
    std::string hag_path;
    std::string sampling = "nearest";
    int resample_factor = 0;
    std::string resample_method = "mean";
};

struct RunConfig {
    bool serial = false;
    double spacing_m = 30.0;
    ClutterOpts clutter;

    Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

void add_clutter_flags(CLI::App* cmd, ClutterOpts& o) {
    cmd->add_option("--clutter", o.clutter_path,
                    "Clutter raster: a height raster, or a land-cover class raster when "
                    "--scheme is given");
    cmd->add_option("--scheme", o.scheme_path, "Land-cover scheme file mapping codes to categories");
    cmd->add_option("--heights", o.heights_path, "Height file overriding the category heights");
    cmd->add_option("--stat", o.stat,
                    "Derive category heights from data: mean, median, or p75 (needs --hag)");
    cmd->add_option("--hag", o.hag_path, "Height-above-ground raster backing --stat");
    cmd->add_option("--clutter-sampling", o.sampling, "Clutter sampling: nearest or bilinear")
        ->check(CLI::IsMember({"nearest", "bilinear"}));
    cmd->add_option("--resample-factor", o.resample_factor,
                    "Coarsen the clutter height raster by this block factor before use");
    cmd->add_option("--resample-method", o.resample_method,
                    "Aggregation for --resample-factor: mean, max, or bilinear")
        ->check(CLI::IsMember({"mean", "max", "bilinear"}));
}

SampleMethod sampling_of(const ClutterOpts& o) {
    return *sample_method_from_name(o.sampling);
}

ResampleMethod resample_method_of(const std::string& name) {
    if (name == "mean") return ResampleMethod::mean;
    if (name == "max") return ResampleMethod::max;
    return ResampleMethod::bilinear;
}

// Height resolution for the land-cover strategy, in override order: built-in
// defaults, heights embedded in the scheme file, an explicit --heights file,
// then data-derived statistics for every category the sample supports.
HeightTable resolve_heights(const SchemeConfig& cfg, const ClutterOpts& o, const Raster& landcover,
                            const std::string& stat_override) {
    HeightTable t = cfg.has_heights ? cfg.heights : HeightTable();
    if (!o.heights_path.empty()) apply_height_file_path(o.heights_path, t);

    const std::string stat = stat_override.empty() ? o.stat : stat_override;
    if (stat.empty() || stat == "defaults" || stat == "manual") return t;

    const auto kind = stat_from_name(stat);
    if (!kind) throw Error("unknown height statistic '" + stat + "'");
    if (o.hag_path.empty()) throw Error("--stat needs a --hag raster to draw heights from");
    const Raster hag_r = load_ascii_grid_file(o.hag_path, RasterKind::height_m);
    for (ClutterCategory c : kAllClutterCategories) {
        if (c == ClutterCategory::water_open_rural) continue;
        try {
            t.set_height(c, class_stat(hag_r, landcover, cfg.scheme, c, *kind));
        } catch (const EmptyClassError&) {
            // category absent from the data: the table value stands
        }
    }
    return t;
}

// Builds the clutter source a command asked for. stat_override, when set,
// replaces o.stat (the evaluation sweep uses it to vary the height source).
ClutterSource make_clutter_source(const ClutterOpts& o, const std::string& stat_override = "") {
    if (o.clutter_path.empty()) {
        if (!o.scheme_path.empty() || !o.heights_path.empty() || !o.stat.empty())
            throw Error("--scheme, --heights, and --stat need a --clutter raster");
        if (o.resample_factor != 0)
            throw Error("--resample-factor needs a --clutter raster");
        return ClutterSource::none();
    }

    if (o.scheme_path.empty()) {
        if (!o.heights_path.empty() || !o.stat.empty())
            throw Error("--heights and --stat apply to land-cover inputs; add --scheme");
        Raster r = load_ascii_grid_file(o.clutter_path, RasterKind::height_m);
        if (o.resample_factor != 0)
            r = resample(r, o.resample_factor, resample_method_of(o.resample_method));
        return ClutterSource::height_raster(std::move(r));
    }

    if (o.resample_factor != 0)
        throw Error("--resample-factor applies to height rasters; resampling class rasters "
                    "this way would blend codes");
    const Raster landcover = load_ascii_grid_file(o.clutter_path, RasterKind::class_code);
    const SchemeConfig cfg = load_scheme_file(o.scheme_path);
    const HeightTable t = resolve_heights(cfg, o, landcover, stat_override);
    return ClutterSource::height_raster(build_height_raster(landcover, cfg.scheme, t));
}

// The label the evaluation report carries for the height source in play.
std::string heights_label(const ClutterOpts& o) {
    if (o.clutter_path.empty() || o.scheme_path.empty()) return "";
    if (!o.stat.empty()) return o.stat;
    if (!o.heights_path.empty()) return "manual";
    return "defaults";
}

void write_to(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write output file: " + out_path);
    f << content;
}

Raster quantized_db(Raster r) {
    for (double& v : r.values) {
        if (r.is_nodata(v)) continue;
        v = std::round(v * 100.0) / 100.0;
    }
    return r;
}

// ---------------------------------------------------------------- commands

int cmd_profile(const RunConfig& cfg, const std::string& terrain_path, double tx_lat,
                double tx_lon, double rx_lat, double rx_lon, const std::string& out_path) {
    const Raster terrain = load_ascii_grid_file(terrain_path, RasterKind::elevation_m);
    const ClutterSource clutter = make_clutter_source(cfg.clutter);
    const PathProfile prof =
        extract_profile(terrain, clutter, GeoPoint(tx_lat, tx_lon), GeoPoint(rx_lat, rx_lon),
                        cfg.spacing_m, sampling_of(cfg.clutter));
    std::ostringstream os;
    os << "# rfprop profile\n";
    write_profile_table(prof, os);
    write_to(out_path, os.str());
    return 0;
}

int cmd_predict(const RunConfig& cfg, const std::string& terrain_path, const LinkSpec& link,
                const std::string& out_path) {
    const Raster terrain = load_ascii_grid_file(terrain_path, RasterKind::elevation_m);
    const ClutterSource clutter = make_clutter_source(cfg.clutter);
    const PathProfile prof = extract_profile(terrain, clutter, link.tx, link.rx, cfg.spacing_m,
                                             sampling_of(cfg.clutter));
    const PredictionResult res = predict(prof, link);
    std::ostringstream os;
    os << "distance_m=" << format_fixed(prof.total_distance_m(), 3) << "\n";
    os << "loss_db=" << format_fixed(res.loss_db, 2) << "\n";
    os << "fspl_db=" << format_fixed(res.fspl_db, 2) << "\n";
    os << "diffraction_db=" << format_fixed(res.diffraction_db, 2) << "\n";
    os << "regime=" << regime_name(res.regime) << "\n";
    write_to(out_path, os.str());
    return 0;
}

int cmd_grid(const RunConfig& cfg, const std::string& terrain_path, CoverageSpec spec,
             const std::vector<double>& bbox, const std::string& out_path) {
    if (bbox.size() != 4)
        throw Error("--bbox takes lat_min,lon_min,lat_max,lon_max");
    spec.lat_min_deg = bbox[0];
    spec.lon_min_deg = bbox[1];
    spec.lat_max_deg = bbox[2];
    spec.lon_max_deg = bbox[3];
    spec.max_spacing_m = cfg.spacing_m;
    spec.clutter_sampling = sampling_of(cfg.clutter);

    const Raster terrain = load_ascii_grid_file(terrain_path, RasterKind::elevation_m);
    const ClutterSource clutter = make_clutter_source(cfg.clutter);
    const Raster loss = quantized_db(predict_grid(terrain, clutter, spec, cfg.exec()));
    std::ostringstream os;
    write_ascii_grid(loss, os);
    write_to(out_path, os.str());
    return 0;
}

struct TableWriter {
    std::vector<std::vector<std::string>> rows;
    size_t cols = 0;

    void add(std::vector<std::string> row) {
        cols = std::max(cols, row.size());
        rows.push_back(std::move(row));
    }

    // First column left-aligned, the rest right-aligned.
    void render(std::ostream& os) const {
        std::vector<size_t> width(cols, 0);
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        for (const auto& row : rows) {
            std::string line;
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) line += "  ";
                const size_t pad = width[i] - row[i].size();
                if (i == 0)
                    line += row[i] + std::string(pad, ' ');
                else
                    line += std::string(pad, ' ') + row[i];
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << "\n";
        }
    }
};

void write_report(std::ostream& os, const EvalReport& rep) {
    for (const DatasetStats& d : rep.per_dataset) {
        os << "dataset." << d.key << ".group=" << d.group_id << "\n";
        os << "dataset." << d.key << ".n=" << d.count << "\n";
        os << "dataset." << d.key << ".rmse_db=" << format_fixed(d.stats.rmse_db, 2) << "\n";
        os << "dataset." << d.key << ".mean_error_db=" << format_fixed(d.stats.mean_error_db, 2)
           << "\n";
        os << "dataset." << d.key << ".median_error_db="
           << format_fixed(d.stats.median_error_db, 2) << "\n";
    }
    for (const auto& [group, avg] : rep.group_avg_rmse)
        os << "group." << group << ".avg_rmse_db=" << format_fixed(avg, 2) << "\n";
    os << "histogram.bin_width_db=" << format_sig(rep.histogram_bin_db, 6) << "\n";
    for (const HistogramBin& b : rep.histogram)
        os << "histogram.bin." << format_sig(b.start_db, 6) << "=" << b.count << "\n";

    os << "\n";
    TableWriter tw;
    tw.add({"dataset", "group", "n", "rmse_db", "mean_db", "median_db"});
    for (const DatasetStats& d : rep.per_dataset)
        tw.add({d.key, d.group_id, std::to_string(d.count), format_fixed(d.stats.rmse_db, 2),
                format_fixed(d.stats.mean_error_db, 2), format_fixed(d.stats.median_error_db, 2)});
    tw.render(os);
    os << "\n";
    TableWriter tg;
    tg.add({"group", "avg_rmse_db"});
    for (const auto& [group, avg] : rep.group_avg_rmse)
        tg.add({group, format_fixed(avg, 2)});
    tg.render(os);
}

struct SweepAxes {
    std::vector<std::string> heights;  // height-source labels
    std::vector<double> spacings;
};

SweepAxes load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest file: " + path);
    SweepAxes axes;
    for (const KvEntry& e : parse_kv(in)) {
        if (e.key == "heights") {
            for (const std::string& raw : split(e.value, ',')) {
                const std::string v = trim(raw);
                if (v != "defaults" && !stat_from_name(v))
                    throw ParseError(path + ": line " + std::to_string(e.line) +
                                     ": unknown height source '" + v + "'");
                axes.heights.push_back(v);
            }
        } else if (e.key == "spacing") {
            for (const std::string& raw : split(e.value, ',')) {
                const double s = parse_double(trim(raw));
                if (!(s > 0.0))
                    throw ParseError(path + ": line " + std::to_string(e.line) +
                                     ": spacing must be positive");
                axes.spacings.push_back(s);
            }
        } else {
            throw ParseError(path + ": line " + std::to_string(e.line) + ": unknown key '" +
                             e.key + "'");
        }
    }
    if (axes.heights.empty() && axes.spacings.empty())
        throw ParseError(path + ": manifest defines no sweep axes");
    return axes;
}

int cmd_evaluate(const RunConfig& cfg, const std::string& terrain_path,
                 const std::string& measurements_path, const std::string& manifest_path,
                 double bin_width_db, bool per_frequency, const std::string& out_path) {
    const Raster terrain = load_ascii_grid_file(terrain_path, RasterKind::elevation_m);
    const std::vector<MeasurementRecord> records = load_measurements_file(measurements_path);

    EvalSettings settings;
    settings.max_spacing_m = cfg.spacing_m;
    settings.clutter_sampling = sampling_of(cfg.clutter);
    settings.histogram_bin_db = bin_width_db;
    settings.per_frequency = per_frequency;

    std::ostringstream os;
    os << "# rfprop evaluate\n";
    os << "run.records=" << records.size() << "\n";
    os << "run.sampling=" << cfg.clutter.sampling << "\n";
    os << "run.per_frequency=" << (per_frequency ? "true" : "false") << "\n";

    if (manifest_path.empty()) {
        os << "run.spacing_m=" << format_fixed(cfg.spacing_m, 3) << "\n";
        if (const std::string h = heights_label(cfg.clutter); !h.empty())
            os << "run.heights=" << h << "\n";
        const ClutterSource clutter = make_clutter_source(cfg.clutter);
        write_report(os, run_evaluation(records, terrain, clutter, settings, cfg.exec()));
        write_to(out_path, os.str());
        return 0;
    }

    SweepAxes axes = load_manifest(manifest_path);
    const bool landcover_strategy =
        !cfg.clutter.clutter_path.empty() && !cfg.clutter.scheme_path.empty();
    if (!axes.heights.empty() && !landcover_strategy)
        throw Error("a heights sweep needs --clutter together with --scheme");
    if (axes.heights.empty()) axes.heights.push_back(heights_label(cfg.clutter));
    if (axes.spacings.empty()) axes.spacings.push_back(cfg.spacing_m);

    struct Cell {
        std::string label;
        std::map<std::string, double> group_avg;
    };
    std::vector<Cell> cells;

    for (const std::string& h : axes.heights) {
        const ClutterSource clutter =
            landcover_strategy ? make_clutter_source(cfg.clutter, h.empty() ? "defaults" : h)
                               : make_clutter_source(cfg.clutter);
        for (double spacing : axes.spacings) {
            EvalSettings s = settings;
            s.max_spacing_m = spacing;
            const std::string label =
                (h.empty() ? std::string("none") : h) + "@" + format_sig(spacing, 6);
            os << "\n";
            os << "run.heights=" << (h.empty() ? "none" : h) << "\n";
            os << "run.spacing_m=" << format_fixed(spacing, 3) << "\n";
            const EvalReport rep = run_evaluation(records, terrain, clutter, s, cfg.exec());
            write_report(os, rep);
            cells.push_back({label, rep.group_avg_rmse});
        }
    }

    os << "\n# sweep summary: avg rmse_db per group\n";
    std::vector<std::string> groups;
    for (const auto& [g, v] : cells.front().group_avg) groups.push_back(g);
    TableWriter tw;
    std::vector<std::string> head = {"group"};
    for (const Cell& c : cells) head.push_back(c.label);
    tw.add(head);
    for (const std::string& g : groups) {
        std::vector<std::string> row = {g};
        for (const Cell& c : cells) {
            auto it = c.group_avg.find(g);
            row.push_back(it == c.group_avg.end() ? "n/a" : format_fixed(it->second, 2));
        }
        tw.add(row);
    }
    tw.render(os);
    write_to(out_path, os.str());
    return 0;
}

int cmd_cluttermap(const ClutterOpts& o, const std::string& out_path) {
    if (o.clutter_path.empty() || o.scheme_path.empty())
        throw Error("cluttermap needs --clutter and --scheme");
    const Raster landcover = load_ascii_grid_file(o.clutter_path, RasterKind::class_code);
    const SchemeConfig cfg = load_scheme_file(o.scheme_path);
    const HeightTable t = resolve_heights(cfg, o, landcover, "");
    const Raster heights = build_height_raster(landcover, cfg.scheme, t);
    std::ostringstream os;
    write_ascii_grid(heights, os);
    write_to(out_path, os.str());
    return 0;
}

int cmd_resample(const RunConfig& cfg, const std::string& in_path, const std::string& kind_name,
                 int factor, const std::string& method_name, const std::string& out_path) {
    RasterKind kind = RasterKind::elevation_m;
    if (kind_name == "height") kind = RasterKind::height_m;
    else if (kind_name == "class") kind = RasterKind::class_code;
    const Raster r = load_ascii_grid_file(in_path, kind);
    const Raster out = resample(r, factor, resample_method_of(method_name), cfg.exec());
    std::ostringstream os;
    write_ascii_grid(out, os);
    write_to(out_path, os.str());
    return 0;
}

int cmd_stats(const std::string& hag_path, const std::string& landcover_path,
              const std::string& scheme_path, const std::string& out_path) {
    const Raster hag_r = load_ascii_grid_file(hag_path, RasterKind::height_m);
    const Raster landcover = load_ascii_grid_file(landcover_path, RasterKind::class_code);
    const SchemeConfig cfg = load_scheme_file(scheme_path);
    std::ostringstream os;
    for (ClutterCategory c : kAllClutterCategories) {
        for (StatKind s : {StatKind::mean, StatKind::median, StatKind::p75}) {
            os << category_name(c) << "." << stat_name(s) << "=";
            try {
                os << format_fixed(class_stat(hag_r, landcover, cfg.scheme, c, s), 3);
            } catch (const EmptyClassError&) {
                os << "n/a";
            }
            os << "\n";
        }
    }
    write_to(out_path, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rural path-loss prediction over terrain and clutter geodata"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_flag("--serial", cfg.serial, "Run the single-threaded reference implementation");

    std::string terrain_path, out_path, measurements_path, manifest_path;
    double tx_lat = 0, tx_lon = 0, rx_lat = 0, rx_lon = 0;
    LinkSpec link;
    CoverageSpec cov;
    std::vector<double> bbox;
    double bin_width_db = 2.0;
    bool per_frequency = false;
    std::string in_path, kind_name = "elevation", method_name = "mean";
    int factor = 0;
    std::string hag_path, landcover_path, scheme_path;

    auto add_common = [&](CLI::App* c, bool with_clutter = true) {
        c->add_option("--out", out_path, "Output file (stdout when omitted)");
        c->add_option("--spacing", cfg.spacing_m, "Profile sample spacing ceiling, meters")
            ->check(CLI::PositiveNumber);
        if (with_clutter) add_clutter_flags(c, cfg.clutter);
    };

    CLI::App* profile = app.add_subcommand("profile", "Terrain and clutter profile between two points");
    profile->add_option("--terrain", terrain_path, "Terrain elevation raster")->required();
    profile->add_option("--tx-lat", tx_lat, "Transmitter latitude")->required();
    profile->add_option("--tx-lon", tx_lon, "Transmitter longitude")->required();
    profile->add_option("--rx-lat", rx_lat, "Receiver latitude")->required();
    profile->add_option("--rx-lon", rx_lon, "Receiver longitude")->required();
    add_common(profile);

    CLI::App* predict = app.add_subcommand("predict", "Point-to-point path-loss prediction");
    predict->add_option("--terrain", terrain_path, "Terrain elevation raster")->required();
    predict->add_option("--tx-lat", tx_lat, "Transmitter latitude")->required();
    predict->add_option("--tx-lon", tx_lon, "Transmitter longitude")->required();
    predict->add_option("--rx-lat", rx_lat, "Receiver latitude")->required();
    predict->add_option("--rx-lon", rx_lon, "Receiver longitude")->required();
    predict->add_option("--tx-height", link.tx_height_agl_m, "Transmitter height AGL, meters")
        ->default_val(10.0);
    predict->add_option("--rx-height", link.rx_height_agl_m, "Receiver height AGL, meters")
        ->default_val(1.5);
    predict->add_option("--freq", link.freq_mhz, "Frequency, MHz")->required();
    add_common(predict);

    CLI::App* grid = app.add_subcommand("grid", "Path-loss raster around a transmitter");
    grid->add_option("--terrain", terrain_path, "Terrain elevation raster")->required();
    grid->add_option("--tx-lat", tx_lat, "Transmitter latitude")->required();
    grid->add_option("--tx-lon", tx_lon, "Transmitter longitude")->required();
    grid->add_option("--tx-height", cov.tx_height_agl_m, "Transmitter height AGL, meters")
        ->default_val(10.0);
    grid->add_option("--rx-height", cov.rx_height_agl_m, "Receiver height AGL, meters")
        ->default_val(1.5);
    grid->add_option("--freq", cov.freq_mhz, "Frequency, MHz")->required();
    grid->add_option("--bbox", bbox, "lat_min,lon_min,lat_max,lon_max")
        ->required()
        ->delimiter(',')
        ->expected(4);
    grid->add_option("--cell", cov.cell_m, "Output cell size, meters")->default_val(100.0);
    add_common(grid);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Compare predictions against measurements");
    evaluate->add_option("--terrain", terrain_path, "Terrain elevation raster")->required();
    evaluate->add_option("--measurements", measurements_path, "Measurement CSV")->required();
    evaluate->add_option("--manifest", manifest_path, "Sweep manifest: heights= and spacing= axes");
    evaluate->add_option("--bin-width", bin_width_db, "Error histogram bin width, dB")
        ->default_val(2.0)
        ->check(CLI::PositiveNumber);
    evaluate->add_flag("--per-frequency", per_frequency, "Split datasets by frequency");
    add_common(evaluate);

    CLI::App* cluttermap = app.add_subcommand("cluttermap", "Land cover to clutter-height raster");
    cluttermap->add_option("--clutter", cfg.clutter.clutter_path, "Land-cover class raster")
        ->required();
    cluttermap->add_option("--scheme", cfg.clutter.scheme_path, "Land-cover scheme file")
        ->required();
    cluttermap->add_option("--heights", cfg.clutter.heights_path,
                           "Height file overriding the category heights");
    cluttermap->add_option("--stat", cfg.clutter.stat,
                           "Derive category heights from data: mean, median, or p75");
    cluttermap->add_option("--hag", cfg.clutter.hag_path, "Height-above-ground raster for --stat");
    cluttermap->add_option("--out", out_path, "Output file (stdout when omitted)");

    CLI::App* resample_cmd = app.add_subcommand("resample", "Coarsen a raster by a block factor");
    resample_cmd->add_option("--in", in_path, "Input raster")->required();
    resample_cmd->add_option("--kind", kind_name, "Raster kind: elevation, height, or class")
        ->check(CLI::IsMember({"elevation", "height", "class"}));
    resample_cmd->add_option("--factor", factor, "Block factor, at least 2")->required();
    resample_cmd->add_option("--method", method_name, "Aggregation: mean, max, or bilinear")
        ->check(CLI::IsMember({"mean", "max", "bilinear"}));
    resample_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");

    CLI::App* stats = app.add_subcommand("stats", "Clutter height statistics per category");
    stats->add_option("--hag", hag_path, "Height-above-ground raster")->required();
    stats->add_option("--clutter", landcover_path, "Land-cover class raster")->required();
    stats->add_option("--scheme", scheme_path, "Land-cover scheme file")->required();
    stats->add_option("--out", out_path, "Output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile->parsed())
            return cmd_profile(cfg, terrain_path, tx_lat, tx_lon, rx_lat, rx_lon, out_path);
        if (predict->parsed()) {
            link.tx = GeoPoint(tx_lat, tx_lon);
            link.rx = GeoPoint(rx_lat, rx_lon);
            return cmd_predict(cfg, terrain_path, link, out_path);
        }
        if (grid->parsed()) {
            cov.tx = GeoPoint(tx_lat, tx_lon);
            return cmd_grid(cfg, terrain_path, cov, bbox, out_path);
        }
        if (evaluate->parsed())
            return cmd_evaluate(cfg, terrain_path, measurements_path, manifest_path, bin_width_db,
                                per_frequency, out_path);
        if (cluttermap->parsed()) return cmd_cluttermap(cfg.clutter, out_path);
        if (resample_cmd->parsed())
            return cmd_resample(cfg, in_path, kind_name, factor, method_name, out_path);
        if (stats->parsed()) return cmd_stats(hag_path, landcover_path, scheme_path, out_path);
    } catch (const Error& e) {
        std::cerr << "rfprop: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
