// SPDX-License-Identifier: Apache-2.0
#include "rfprop/profile.hpp"

#include <ostream>
#include <string>

#include "rfprop/error.hpp"
#include "rfprop/textio.hpp"

namespace rfprop {

const char* sample_method_name(SampleMethod m) {
    return m == SampleMethod::nearest ? "nearest" : "bilinear";
}

std::optional<SampleMethod> sample_method_from_name(const std::string& name) {
    if (name == "nearest") return SampleMethod::nearest;
    if (name == "bilinear") return SampleMethod::bilinear;
    return std::nullopt;
}

ClutterSource ClutterSource::height_raster(Raster r) {
    if (r.kind == RasterKind::class_code)
        throw KindError("clutter source needs a height raster, not class codes; "
                        "build a height map from the land cover first");
    ClutterSource out;
    out.raster_ = std::move(r);
    return out;
}

PathProfile extract_profile(const Raster& terrain, const ClutterSource& clutter,
                            const GeoPoint& tx, const GeoPoint& rx, double max_spacing_m,
                            SampleMethod clutter_sampling) {
    if (!terrain.contains(tx))
        throw OutOfBoundsError("transmitter is outside the terrain raster");
    if (!terrain.contains(rx))
        throw OutOfBoundsError("receiver is outside the terrain raster");

    const SampledPath path = sample_path(tx, rx, max_spacing_m);
    const Raster* cl = clutter.raster();

    PathProfile out;
    out.spacing_m = path.spacing_m;
    out.points.reserve(path.points.size());
    for (size_t i = 0; i < path.points.size(); ++i) {
        const GeoPoint& p = path.points[i];
        ProfilePoint pt;
        pt.distance_m = static_cast<double>(i) * path.spacing_m;
        pt.terrain_m = sample_bilinear(terrain, p);

        const bool terminal = i == 0 || i + 1 == path.points.size();
        if (cl && !terminal) {
            double c = 0.0;
            try {
                c = clutter_sampling == SampleMethod::bilinear ? sample_bilinear(*cl, p)
                                                               : sample_nearest(*cl, p);
            } catch (const OutOfBoundsError&) {
                // no clutter coverage here: treat as open ground
            } catch (const NoDataError&) {
            }
            pt.clutter_m = c < 0.0 ? 0.0 : c;
        }
        out.points.push_back(pt);
    }
    return out;
}

std::vector<double> profile_surface(const PathProfile& p) {
    std::vector<double> out;
    out.reserve(p.points.size());
    for (const ProfilePoint& pt : p.points) out.push_back(pt.terrain_m + pt.clutter_m);
    return out;
}

void write_profile_table(const PathProfile& p, std::ostream& out) {
    out << "# d_m terrain_m clutter_m\n";
    for (const ProfilePoint& pt : p.points) {
        out << format_fixed(pt.distance_m, 3) << ' ' << format_fixed(pt.terrain_m, 3) << ' '
            << format_fixed(pt.clutter_m, 3) << "\n";
    }
}

PathProfile read_profile_table(std::istream& in) {
    PathProfile out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> cols;
        for (const std::string& c : split(t, ' '))
            if (!c.empty()) cols.push_back(c);
        if (cols.size() != 3)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected three columns, got " + std::to_string(cols.size()));
        ProfilePoint pt;
        pt.distance_m = parse_double(cols[0]);
        pt.terrain_m = parse_double(cols[1]);
        pt.clutter_m = parse_double(cols[2]);
        out.points.push_back(pt);
    }
    if (out.points.size() < 2)
        throw ParseError("profile table needs at least two points");
    out.spacing_m = out.points.back().distance_m / static_cast<double>(out.points.size() - 1);
    return out;
}

} // namespace rfprop
