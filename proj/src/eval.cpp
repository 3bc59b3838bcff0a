// SPDX-License-Identifier: Apache-2.0
#include "rfprop/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>

#include "rfprop/error.hpp"
#include "rfprop/textio.hpp"

namespace rfprop {

namespace {

const std::vector<std::string>& measurement_columns() {
    static const std::vector<std::string> cols = {
        "dataset", "group", "tx_lat", "tx_lon", "tx_h_agl_m",
        "rx_lat",  "rx_lon", "rx_h_agl_m", "freq_mhz", "path_loss_db"};
    return cols;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

double field_double(const std::vector<std::string>& fields, size_t i, int lineno) {
    try {
        return parse_double(fields[i]);
    } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(lineno) + ": invalid value '" + fields[i] +
                         "' in column '" + measurement_columns()[i] + "'");
    }
}

} // namespace

std::vector<MeasurementRecord> load_measurements(std::istream& in) {
    std::string line;
    int lineno = 0;
    do {
        if (!std::getline(in, line))
            throw ParseError("measurement file is empty");
        ++lineno;
        line = strip_cr(line);
    } while (trim(line).empty());

    const std::vector<std::string> header = split(trim(line), ',');
    const auto& expected = measurement_columns();
    for (const std::string& col : expected)
        if (std::find(header.begin(), header.end(), col) == header.end())
            throw ParseError("measurement header is missing column '" + col + "'");
    if (header != expected)
        throw ParseError("measurement header columns are out of order");

    std::vector<MeasurementRecord> out;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (trim(line).empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != expected.size())
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(expected.size()) + " fields, got " +
                             std::to_string(f.size()));
        MeasurementRecord r;
        r.dataset_id = trim(f[0]);
        r.group_id = trim(f[1]);
        if (r.dataset_id.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty dataset id");
        if (r.group_id.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty group id");
        try {
            r.tx = GeoPoint(field_double(f, 2, lineno), field_double(f, 3, lineno));
            r.rx = GeoPoint(field_double(f, 5, lineno), field_double(f, 6, lineno));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        r.tx_height_agl_m = field_double(f, 4, lineno);
        r.rx_height_agl_m = field_double(f, 7, lineno);
        r.freq_mhz = field_double(f, 8, lineno);
        r.measured_loss_db = field_double(f, 9, lineno);
        if (!(r.tx_height_agl_m > 0.0) || !(r.rx_height_agl_m > 0.0))
            throw ParseError("line " + std::to_string(lineno) + ": antenna heights must be positive");
        if (!std::isfinite(r.measured_loss_db))
            throw ParseError("line " + std::to_string(lineno) + ": path loss must be finite");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MeasurementRecord> load_measurements_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open measurement file: " + path);
    try {
        return load_measurements(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_measurements(const std::vector<MeasurementRecord>& records, std::ostream& out) {
    const auto& cols = measurement_columns();
    for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const MeasurementRecord& r : records) {
        out << r.dataset_id << ',' << r.group_id << ',' << format_double(r.tx.lat_deg()) << ','
            << format_double(r.tx.lon_deg()) << ',' << format_double(r.tx_height_agl_m) << ','
            << format_double(r.rx.lat_deg()) << ',' << format_double(r.rx.lon_deg()) << ','
            << format_double(r.rx_height_agl_m) << ',' << format_double(r.freq_mhz) << ','
            << format_double(r.measured_loss_db) << "\n";
    }
}

ErrorStats error_stats(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.empty())
        throw EmptyInputError("no prediction/measurement pairs");
    std::vector<double> errors;
    errors.reserve(pairs.size());
    double sum = 0.0;
    double sumsq = 0.0;
    for (const auto& [predicted, measured] : pairs) {
        const double e = predicted - measured;
        errors.push_back(e);
        sum += e;
        sumsq += e * e;
    }
    const double n = static_cast<double>(errors.size());
    ErrorStats s;
    s.rmse_db = std::sqrt(sumsq / n);
    s.mean_error_db = sum / n;
    std::sort(errors.begin(), errors.end());
    const size_t rank = static_cast<size_t>(std::ceil(0.5 * n));
    s.median_error_db = errors[std::max<size_t>(rank, 1) - 1];
    return s;
}

std::map<std::string, double> group_average(const std::map<std::string, double>& per_dataset_rmse,
                                            const std::map<std::string, std::string>& membership) {
    std::map<std::string, std::pair<double, long>> acc;
    for (const auto& [dataset, rmse] : per_dataset_rmse) {
        auto it = membership.find(dataset);
        if (it == membership.end()) continue;
        auto& [sum, n] = acc[it->second];
        sum += rmse;
        ++n;
    }
    std::map<std::string, double> out;
    for (const auto& [group, sn] : acc) out[group] = sn.first / static_cast<double>(sn.second);
    return out;
}

std::vector<HistogramBin> error_histogram(const std::vector<double>& errors_db,
                                          double bin_width_db) {
    if (!(bin_width_db > 0.0))
        throw Error("histogram bin width must be positive");
    std::map<long, long> bins;
    for (double e : errors_db) ++bins[static_cast<long>(std::floor(e / bin_width_db))];
    std::vector<HistogramBin> out;
    out.reserve(bins.size());
    for (const auto& [k, count] : bins)
        out.push_back({static_cast<double>(k) * bin_width_db, count});
    return out;
}

EvalReport run_evaluation(const std::vector<MeasurementRecord>& records, const Raster& terrain,
                          const ClutterSource& clutter, const EvalSettings& settings,
                          Exec exec) {
    if (records.empty())
        throw EmptyInputError("no measurement records");

    const std::int64_t n = static_cast<std::int64_t>(records.size());
    std::vector<double> predicted(records.size(), 0.0);
    std::vector<std::exception_ptr> failures(records.size());

    detail::for_each_index(n, exec, [&](std::int64_t i) {
        try {
            const MeasurementRecord& r = records[i];
            LinkSpec link{r.tx, r.rx, r.tx_height_agl_m, r.rx_height_agl_m, r.freq_mhz};
            const PathProfile prof = extract_profile(terrain, clutter, r.tx, r.rx,
                                                     settings.max_spacing_m,
                                                     settings.clutter_sampling);
            predicted[i] = predict(prof, link).loss_db;
        } catch (...) {
            failures[i] = std::current_exception();
        }
    });

    for (size_t i = 0; i < failures.size(); ++i) {
        if (!failures[i]) continue;
        const std::string where = "record " + std::to_string(i + 1) + " in dataset '" +
                                  records[i].dataset_id + "': ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const OutOfBoundsError& e) {
            throw OutOfBoundsError(where + e.what());
        } catch (const Error& e) {
            throw Error(where + e.what());
        }
    }

    // Canonical record order: by aggregation key, input order within a key.
    // Everything downstream, including in-bucket summation order, follows it,
    // which is what makes the report independent of the execution policy.
    const auto key_of = [&](const MeasurementRecord& r) {
        if (!settings.per_frequency) return r.dataset_id;
        return r.dataset_id + "@" + format_double(r.freq_mhz);
    };
    std::vector<size_t> order(records.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return key_of(records[a]) < key_of(records[b]);
    });

    struct Bucket {
        std::string group;
        std::vector<std::pair<double, double>> pairs;
    };
    std::map<std::string, Bucket> buckets;
    std::vector<double> all_errors;
    all_errors.reserve(records.size());
    for (size_t idx : order) {
        const MeasurementRecord& r = records[idx];
        Bucket& b = buckets[key_of(r)];
        if (b.group.empty()) b.group = r.group_id;
        b.pairs.emplace_back(predicted[idx], r.measured_loss_db);
        all_errors.push_back(predicted[idx] - r.measured_loss_db);
    }

    EvalReport report;
    report.histogram_bin_db = settings.histogram_bin_db;
    std::map<std::string, double> rmse_by_key;
    std::map<std::string, std::string> membership;
    for (const auto& [key, bucket] : buckets) {
        DatasetStats ds;
        ds.key = key;
        ds.group_id = bucket.group;
        ds.count = static_cast<long>(bucket.pairs.size());
        ds.stats = error_stats(bucket.pairs);
        report.per_dataset.push_back(std::move(ds));
        rmse_by_key[key] = report.per_dataset.back().stats.rmse_db;
        membership[key] = bucket.group;
    }
    report.group_avg_rmse = group_average(rmse_by_key, membership);
    report.histogram = error_histogram(all_errors, settings.histogram_bin_db);
    return report;
}

} // namespace rfprop
