#include "ade/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ade/norms.hpp"

namespace ade {

void compute_rates(ErrorReport& r) {
    std::vector<std::pair<long long, double>> l2s, lis;
    for (const auto& row : r.rows) {
        l2s.emplace_back(row.resolution, row.l2);
        lis.emplace_back(row.resolution, row.linf);
    }
    const std::vector<double> r2 = convergence_rates(l2s);
    const std::vector<double> ri = convergence_rates(lis);
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        r.rows[k].l2_rate = k == 0 ? std::numeric_limits<double>::quiet_NaN() : r2[k - 1];
        r.rows[k].linf_rate = k == 0 ? std::numeric_limits<double>::quiet_NaN() : ri[k - 1];
    }
}

std::string format_sig(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(const ErrorReport& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "resolution,l2,linf,l2_rate,linf_rate\n";
    for (const auto& row : r.rows) {
        out << row.resolution << ',' << format_sig(row.l2) << ',' << format_sig(row.linf) << ','
            << format_sig(row.l2_rate) << ',' << format_sig(row.linf_rate) << '\n';
    }
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

ErrorReport read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    ErrorReport r;
    std::string line;
    if (!std::getline(in, line) || line != "resolution,l2,linf,l2_rate,linf_rate")
        throw std::runtime_error("read_csv: bad header in " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        ErrorReportRow row;
        auto next = [&]() {
            if (!std::getline(ss, cell, ',')) cell.clear();
            return cell;
        };
        row.resolution = std::stoll(next());
        row.l2 = std::stod(next());
        row.linf = std::stod(next());
        const std::string a = next();
        row.l2_rate = a.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(a);
        const std::string b = next();
        row.linf_rate = b.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(b);
        r.rows.push_back(row);
    }
    return r;
}

namespace {

std::string sidecar_path(const std::string& path) {
    std::string stem = path;
    const std::string ext = ".pgm";
    if (stem.size() >= ext.size() && stem.compare(stem.size() - ext.size(), ext.size(), ext) == 0)
        stem.resize(stem.size() - ext.size());
    return stem + ".minmax.txt";
}

}  // namespace

void write_pgm(const std::vector<double>& values, int width, int height, const std::string& path) {
    if (width <= 0 || height <= 0 ||
        values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw std::invalid_argument("write_pgm: bad dimensions");
    double lo = values[0], hi = values[0];
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("write_pgm: non-finite value");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
    out << "P5\n" << width << ' ' << height << "\n255\n";
    std::vector<unsigned char> bytes(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        const long pix = span == 0.0 ? 128 : std::lround((values[k] - lo) / span * 255.0);
        bytes[k] = static_cast<unsigned char>(std::clamp(pix, 0L, 255L));
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write_pgm: write failed for " + path);

    std::ofstream side(sidecar_path(path), std::ios::binary);
    if (!side) throw std::runtime_error("write_pgm: cannot open sidecar for " + path);
    side << "min = " << format_sig(lo) << "\nmax = " << format_sig(hi) << "\n";
}

void write_pgm(const Field2D& f, const std::string& path) {
    write_pgm(f.v, f.grid.ny(), f.grid.nx(), path);
}

void write_pgm(const Field1D& f, const std::string& path) {
    write_pgm(f.v, f.grid.nodes(), 1, path);
}

}  // namespace ade
