#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "seghull/dataio.hpp"
#include "seghull/hull.hpp"

namespace seghull::bench {

struct DatasetSpec {
  std::string label;
  PointSet points;
};

struct BenchConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<hull::Mode> modes{hull::Mode::WithPreprocess,
                                hull::Mode::WithoutPreprocess};
  Backend backend = Backend::Sequential;
  int repeat = 3;      // timed runs per cell; one extra warm-up run is discarded
  bool verify = false; // abort on the first hull/baseline mismatch
  std::optional<std::filesystem::path> emit_hull;  // text dump of the last cell's hull
};

// One benchmark row. The phase columns come from the run whose total time is
// the median of the repeats, so total_ms >= pre_ms + split_ms + recurse_ms
// always holds within that run. baseline_ms times this repository's
// sequential monotone chain on the same input; speedup = baseline / total.
struct BenchRecord {
  std::string dataset;
  std::size_t size = 0;
  int mode = 0;
  double total_ms = 0.0;
  double pre_ms = 0.0;
  double split_ms = 0.0;
  double recurse_ms = 0.0;
  double baseline_ms = 0.0;
  double speedup = 0.0;
  std::size_t hull_size = 0;
  bool verified = false;  // hull matched the baseline's vertex list exactly
};

// Runs every (dataset, mode) cell: warm-up, `repeat` timed runs, median
// reported. The hull is always compared against the baseline; with
// config.verify a mismatch throws Errc::VerificationFailed immediately.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline const char* csv_header() {
  return "dataset,size,mode,total_ms,pre_ms,split_ms,recurse_ms,baseline_ms,"
         "speedup,hull_size,verified";
}

void write_csv(std::span<const BenchRecord> records, std::ostream& out);

}  // namespace seghull::bench
