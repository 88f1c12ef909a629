// hullbench: benchmark and verification harness for the convex hull engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seghull/bench.hpp"
#include "seghull/dataio.hpp"
#include "seghull/error.hpp"

namespace {

using namespace seghull;

// "uniform:N:SEED" or "circle:N:SEED"
bench::DatasetSpec parse_gen_spec(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw CLI::ValidationError("--gen", "expected KIND:N:SEED, got '" + spec + "'");
  }
  const std::string kind = spec.substr(0, first);
  std::size_t n = 0;
  std::uint64_t seed = 0;
  try {
    n = std::stoull(spec.substr(first + 1, second - first - 1));
    seed = std::stoull(spec.substr(second + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--gen", "bad count or seed in '" + spec + "'");
  }
  bench::DatasetSpec dataset;
  dataset.label = spec;
  if (kind == "uniform") {
    dataset.points = gen_uniform(n, seed);
  } else if (kind == "circle") {
    dataset.points = gen_circle(n, seed);
  } else {
    throw CLI::ValidationError("--gen", "unknown generator '" + kind + "'");
  }
  return dataset;
}

bench::DatasetSpec load_input(const std::filesystem::path& path, bool as_mesh) {
  bench::DatasetSpec dataset;
  dataset.label = path.filename().string();
  if (as_mesh) {
    dataset.points = read_mesh_vertices(path);
    return dataset;
  }
  // sniff the binary magic, otherwise assume text
  std::ifstream probe(path, std::ios::binary);
  char magic[4] = {};
  const bool binary = probe && probe.read(magic, 4) &&
                      std::string_view(magic, 4) == "PTS2";
  dataset.points =
      read_points(path, binary ? PointFormat::Binary : PointFormat::Text);
  return dataset;
}

void print_table(const std::vector<bench::BenchRecord>& records) {
  std::printf("%-24s %10s %4s %10s %9s %9s %11s %12s %8s %6s %8s\n", "dataset",
              "size", "mode", "total_ms", "pre_ms", "split_ms", "recurse_ms",
              "baseline_ms", "speedup", "hull", "verified");
  for (const auto& r : records) {
    std::printf("%-24s %10zu %4d %10.3f %9.3f %9.3f %11.3f %12.3f %8.3f %6zu %8s\n",
                r.dataset.c_str(), r.size, r.mode, r.total_ms, r.pre_ms, r.split_ms,
                r.recurse_ms, r.baseline_ms, r.speedup, r.hull_size,
                r.verified ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark harness for the segment-based planar convex hull engine"};

  std::vector<std::string> gen_specs;
  std::vector<std::string> input_paths;
  bool as_mesh = false;
  std::vector<int> modes;
  std::string backend = "seq";
  int repeat = 3;
  std::string csv_path;
  bool verify = false;
  std::string emit_hull_path;

  app.add_option("--gen", gen_specs,
                 "generated dataset, uniform:N:SEED or circle:N:SEED (repeatable)");
  app.add_option("--input", input_paths, "point file, text or binary (repeatable)");
  app.add_flag("--mesh", as_mesh, "treat --input files as OBJ/PLY meshes");
  app.add_option("--mode", modes, "1 = with preprocessing, 2 = without; default both")
      ->check(CLI::IsMember({1, 2}));
  app.add_option("--backend", backend, "seq | par (default seq)")
      ->check(CLI::IsMember({"seq", "par"}));
  app.add_option("--repeat", repeat, "timed repetitions per cell (default 3)")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--csv", csv_path, "write records as CSV to this path");
  app.add_flag("--verify", verify,
               "compare every hull against the sequential baseline; "
               "exit 1 on the first mismatch");
  app.add_option("--emit-hull", emit_hull_path,
                 "write the last cell's hull vertices as a text point file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bench::BenchConfig config;
    for (const std::string& spec : gen_specs) {
      config.datasets.push_back(parse_gen_spec(spec));
    }
    for (const std::string& path : input_paths) {
      config.datasets.push_back(load_input(path, as_mesh));
    }
    if (config.datasets.empty()) {
      std::cerr << "hullbench: no datasets; pass --gen or --input (see --help)\n";
      return 2;
    }
    if (!modes.empty()) {
      config.modes.clear();
      for (const int m : modes) config.modes.push_back(static_cast<hull::Mode>(m));
    }
    config.backend = backend == "par" ? Backend::Multicore : Backend::Sequential;
    config.repeat = repeat;
    config.verify = verify;
    if (!emit_hull_path.empty()) config.emit_hull = emit_hull_path;

    const std::vector<bench::BenchRecord> records = bench::run_bench(config);
    print_table(records);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path, std::ios::trunc);
      if (!csv) throw Error(Errc::IoError, "cannot open for writing: " + csv_path);
      bench::write_csv(records, csv);
      if (!csv) throw Error(Errc::IoError, "write failed: " + csv_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "hullbench: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "hullbench: " << e.what() << '\n';
    return e.code() == Errc::VerificationFailed ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "hullbench: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
