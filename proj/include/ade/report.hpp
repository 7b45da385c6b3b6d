#pragma once
#include <limits>
#include <string>
#include <vector>

#include "ade/grid.hpp"

namespace ade {

struct ErrorReportRow {
    long long resolution = 0;
    double l2 = 0.0;
    double linf = 0.0;
    double l2_rate = std::numeric_limits<double>::quiet_NaN();    // blank on first row
    double linf_rate = std::numeric_limits<double>::quiet_NaN();
};

struct ErrorReport {
    std::string experiment;
    std::string fixed_params;
    double wall_seconds = 0.0;
    std::vector<ErrorReportRow> rows;
};

// Fills the rate columns from the error columns (first row stays blank).
void compute_rates(ErrorReport& r);

// 12 significant digits, dot decimal; NaN prints as an empty field.
std::string format_sig(double v);

// Header `resolution,l2,linf,l2_rate,linf_rate`, newline-terminated rows.
void write_csv(const ErrorReport& r, const std::string& path);
ErrorReport read_csv(const std::string& path);

// Binary P5, 8 bit; values mapped affinely from [min,max] to [0,255],
// constant fields map to 128. min/max go to a `<stem>.minmax.txt` sidecar.
void write_pgm(const std::vector<double>& values, int width, int height, const std::string& path);
void write_pgm(const Field2D& f, const std::string& path);
void write_pgm(const Field1D& f, const std::string& path);

}  // namespace ade
