#include "seghull/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "seghull/error.hpp"
#include "seghull/oracle.hpp"

namespace seghull::bench {

namespace {

using Clock = std::chrono::steady_clock;

struct TimedRun {
  double total_ms = 0.0;
  hull::HullResult result;
};

// Index of the run holding the median total time (lower median for even n).
std::size_t median_by_total(const std::vector<TimedRun>& runs) {
  std::vector<std::size_t> order(runs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return runs[a].total_ms < runs[b].total_ms;
  });
  return order[(order.size() - 1) / 2];
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.repeat < 1) throw std::invalid_argument("repeat must be >= 1");

  std::vector<BenchRecord> records;
  std::vector<Point> last_hull;

  for (const DatasetSpec& dataset : config.datasets) {
    // Baseline: the in-repo sequential monotone chain, timed on the same
    // input. Its result doubles as the verification reference.
    std::vector<Point> reference = oracle::monotone_chain(dataset.points);
    std::vector<double> baseline_times;
    baseline_times.reserve(static_cast<std::size_t>(config.repeat));
    for (int r = 0; r < config.repeat; ++r) {
      const auto t0 = Clock::now();
      reference = oracle::monotone_chain(dataset.points);
      baseline_times.push_back(
          std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    }
    const double baseline_ms = median(baseline_times);

    for (const hull::Mode mode : config.modes) {
      (void)hull::run(dataset.points, mode, config.backend);  // warm-up
      std::vector<TimedRun> runs;
      runs.reserve(static_cast<std::size_t>(config.repeat));
      for (int r = 0; r < config.repeat; ++r) {
        TimedRun timed;
        const auto t0 = Clock::now();
        timed.result = hull::run(dataset.points, mode, config.backend);
        timed.total_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        runs.push_back(std::move(timed));
      }
      const TimedRun& chosen = runs[median_by_total(runs)];

      BenchRecord record;
      record.dataset = dataset.label;
      record.size = dataset.points.size();
      record.mode = static_cast<int>(mode);
      record.total_ms = chosen.total_ms;
      record.pre_ms = chosen.result.phase_timings.pre_ms;
      record.split_ms = chosen.result.phase_timings.split_ms;
      record.recurse_ms = chosen.result.phase_timings.recurse_ms;
      record.baseline_ms = baseline_ms;
      record.speedup = baseline_ms / record.total_ms;
      record.hull_size = chosen.result.vertices.size();
      record.verified = chosen.result.vertices == reference;
      if (config.verify && !record.verified) {
        throw Error(Errc::VerificationFailed,
                    "hull mismatch for dataset " + dataset.label + " in mode " +
                        std::to_string(record.mode));
      }
      records.push_back(std::move(record));
      last_hull = chosen.result.vertices;
    }
  }

  if (config.emit_hull && !last_hull.empty()) {
    PointSet hull_points;
    hull_points.reserve(last_hull.size());
    for (const Point& p : last_hull) hull_points.push_back(p);
    write_points(hull_points, *config.emit_hull, PointFormat::Text);
  }
  return records;
}

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << csv_header() << '\n';
  char buf[128];
  for (const BenchRecord& r : records) {
    out << r.dataset << ',' << r.size << ',' << r.mode << ',';
    std::snprintf(buf, sizeof(buf), "%.3f,%.3f,%.3f,%.3f,%.3f,%.3f", r.total_ms,
                  r.pre_ms, r.split_ms, r.recurse_ms, r.baseline_ms, r.speedup);
    out << buf << ',' << r.hull_size << ',' << (r.verified ? "true" : "false")
        << '\n';
  }
}

}  // namespace seghull::bench
