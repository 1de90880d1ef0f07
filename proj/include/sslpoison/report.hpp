#pragma once

#include "sslpoison/experiment.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sslpoison::report {

double median(std::vector<double> values);

// "benign", "phantom (PDR=20%, PV=0.3)", "empty (PDR=20%)", ...
std::string scenario_label(const exp::ResultRecord& record);

// Rows = scenarios, columns = mixmatch, uda, fixmatch; cells are median
// test accuracy (%) over seeds. Failed records are skipped.
void write_table_csv(const std::vector<exp::ResultRecord>& records, const std::filesystem::path& path);

struct Curve {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, median accuracy)
};

// Phantom records grouped by `series` ("pv" or "pdr"), one point per `x`
// value. Benign runs count as PDR 0 on every PV series.
std::vector<Curve> curves(const std::vector<exp::ResultRecord>& records, const std::string& x,
                          const std::string& series);
void write_curves_csv(const std::vector<Curve>& curves, const std::string& x, const std::filesystem::path& path);
void write_curves_svg(const std::vector<Curve>& curves, const std::string& xLabel, std::optional<double> naive,
                      const std::filesystem::path& path);

// table.csv, pdr_curves.{csv,svg}, pv_curves.{csv,svg}. Returns written files.
std::vector<std::filesystem::path> emit_report(const std::vector<exp::ResultRecord>& records,
                                               const std::filesystem::path& dir);

// Every result.json below `runsDir`.
std::vector<exp::ResultRecord> collect_records(const std::filesystem::path& runsDir);

} // namespace sslpoison::report
