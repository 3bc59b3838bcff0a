// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rfprop/exec.hpp"
#include "rfprop/kernel.hpp"
#include "rfprop/profile.hpp"

namespace rfprop {

struct MeasurementRecord {
    std::string dataset_id;
    std::string group_id;
    GeoPoint tx;
    GeoPoint rx;
    double tx_height_agl_m = 0.0;
    double rx_height_agl_m = 0.0;
    double freq_mhz = 0.0;
    double measured_loss_db = 0.0;

    bool operator==(const MeasurementRecord&) const = default;
};

// CSV with the exact header
//   dataset,group,tx_lat,tx_lon,tx_h_agl_m,rx_lat,rx_lon,rx_h_agl_m,freq_mhz,path_loss_db
// ParseError messages name the missing column or the offending line.
std::vector<MeasurementRecord> load_measurements(std::istream& in);
std::vector<MeasurementRecord> load_measurements_file(const std::string& path);

// Numeric fields are written with shortest round-trip precision, so
// load(write(records)) == records field for field.
void write_measurements(const std::vector<MeasurementRecord>& records, std::ostream& out);

struct ErrorStats {
    double rmse_db = 0.0;
    double mean_error_db = 0.0;
    double median_error_db = 0.0; // nearest-rank median
};

// Statistics of predicted minus measured over (predicted, measured) pairs.
// EmptyInputError on an empty list.
ErrorStats error_stats(const std::vector<std::pair<double, double>>& pairs);

// Per-group unweighted mean of the member datasets' RMSE values. membership
// maps dataset id to group id; datasets without a membership entry are
// skipped.
std::map<std::string, double> group_average(const std::map<std::string, double>& per_dataset_rmse,
                                            const std::map<std::string, std::string>& membership);

struct HistogramBin {
    double start_db = 0.0; // bin covers [start_db, start_db + width)
    long count = 0;
};

// Counts errors into half-open bins of the given width, aligned so that bin
// edges are integer multiples of the width. Only nonempty bins are returned,
// in ascending order.
std::vector<HistogramBin> error_histogram(const std::vector<double>& errors_db,
                                          double bin_width_db);

struct DatasetStats {
    std::string key;      // dataset id, or dataset@freq when split by frequency
    std::string group_id;
    long count = 0;
    ErrorStats stats;
};

struct EvalReport {
    std::vector<DatasetStats> per_dataset;              // ascending by key
    std::map<std::string, double> group_avg_rmse;
    std::vector<HistogramBin> histogram;
    double histogram_bin_db = 0.0;
};

struct EvalSettings {
    double max_spacing_m = 30.0;
    SampleMethod clutter_sampling = SampleMethod::nearest;
    double histogram_bin_db = 2.0;
    // Splits every dataset by frequency into dataset@freq pseudo-datasets.
    bool per_frequency = false;
};

// Predicts every record over the given terrain and clutter and aggregates
// the errors. Record failures carry the dataset id and the 1-based record
// index; when several records fail, the earliest one in input order is
// reported, independent of the execution policy.
EvalReport run_evaluation(const std::vector<MeasurementRecord>& records, const Raster& terrain,
                          const ClutterSource& clutter, const EvalSettings& settings,
                          Exec exec = Exec::parallel);

} // namespace rfprop
