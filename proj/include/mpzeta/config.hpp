#pragma once

#include "mpzeta/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace mpzeta {

struct RunConfig {
    std::string command;
    std::string curve_or_field;
    double t_from = -1.0, t_to = 1.0, t_step = 0.1;
    double tol = 1e-8;
    bool strict = false;
    std::string method = "theta";
    std::string zero_file;
    std::string cache_dir = "cache";
    std::string out_path;
    std::map<std::string, std::string> extra;

    std::string canonical() const;  // deterministic key=value serialization
    std::string config_hash() const;  // FNV-1a of canonical(), hex
};

// CSV emitter: header row, fixed formatting, trailing "# config-hash=..."
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns,
              const RunConfig& config);
    ~CsvWriter();
    void row(const std::vector<double>& values);
    void close();

  private:
    void* out_;  // FILE*
    std::string hash_;
    std::size_t ncols_;
};

std::vector<double> make_grid(double from, double to, double step);

}  // namespace mpzeta
