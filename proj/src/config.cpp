#include "mpzeta/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace mpzeta {

std::string RunConfig::canonical() const {
    std::ostringstream os;
    os.precision(17);
    os << "command=" << command << ";target=" << curve_or_field << ";t_from=" << t_from
       << ";t_to=" << t_to << ";t_step=" << t_step << ";tol=" << tol
       << ";strict=" << (strict ? 1 : 0) << ";method=" << method << ";zeros=" << zero_file;
    for (const auto& [k, v] : extra) os << ";" << k << "=" << v;
    return os.str();
}

std::string RunConfig::config_hash() const {
    // FNV-1a 64-bit
    std::string c = canonical();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : c) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns,
                     const RunConfig& config) {
    FILE* f = path.empty() ? stdout : std::fopen(path.c_str(), "w");
    if (!f) throw config_error("cannot open output: " + path);
    out_ = f;
    hash_ = config.config_hash();
    ncols_ = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i)
        std::fprintf(f, "%s%s", i ? "," : "", columns[i].c_str());
    std::fprintf(f, "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
    if (!out_) throw config_error("CsvWriter: already closed");
    if (values.size() != ncols_) throw config_error("CsvWriter: column count mismatch");
    FILE* f = static_cast<FILE*>(out_);
    for (std::size_t i = 0; i < values.size(); ++i)
        std::fprintf(f, "%s%.12g", i ? "," : "", values[i]);
    std::fprintf(f, "\n");
}

void CsvWriter::close() {
    if (!out_) return;
    FILE* f = static_cast<FILE*>(out_);
    std::fprintf(f, "# config-hash=%s\n", hash_.c_str());
    if (f != stdout) std::fclose(f);
    out_ = nullptr;
}

CsvWriter::~CsvWriter() { close(); }

std::vector<double> make_grid(double from, double to, double step) {
    if (!(step > 0.0)) throw config_error("grid step must be positive");
    std::vector<double> g;
    for (double t = from; t <= to + 1e-12; t += step) g.push_back(t);
    return g;
}

}  // namespace mpzeta
