#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sethlab/edit_distance.hpp"

namespace sethlab {

struct BenchRecord {
  std::string engine;
  std::size_t n = 0;
  std::size_t trial = 0;
  double wall_time = 0.0;  // seconds
  std::uint64_t checksum = 0;
};

struct ScalingFit {
  std::string engine;
  double exponent = 0.0;
  double r_squared = 0.0;
  std::size_t sizes = 0;
};

/// The pair timed for size n; depends only on (n, seed).
inline std::pair<Sequence, Sequence> bench_input(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  Sequence x(n, '0'), y(n, '0');
  for (auto& c : x) c = static_cast<char>('0' + (rng() & 3));
  for (auto& c : y) c = static_cast<char>('0' + (rng() & 3));
  return {std::move(x), std::move(y)};
}

/// Sequential timing: one untimed warm-up per size, then `trials` timed runs.
inline std::vector<BenchRecord> run_scaling_bench(Engine engine, const std::vector<std::size_t>& sizes,
                                                  std::size_t trials, std::uint64_t seed) {
  if (trials < 3) throw std::invalid_argument("run_scaling_bench: trials must be >= 3");
  if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end()) || sizes.front() == 0)
    throw std::invalid_argument("run_scaling_bench: sizes must be positive and ascending");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (std::size_t n : sizes) {
    const auto [x, y] = bench_input(n, seed);
    volatile std::uint64_t sink = edit_distance(x, y, engine);
    (void)sink;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto start = clock::now();
      const std::uint64_t d = edit_distance(x, y, engine);
      const auto stop = clock::now();
      double secs = std::chrono::duration<double>(stop - start).count();
      if (secs <= 0.0) secs = 1e-9;  // below clock resolution
      records.push_back({std::string(engine_name(engine)), n, t, secs, d});
    }
  }
  return records;
}

inline double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty set");
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

/// Least-squares slope of log(median time) against log(n).
inline ScalingFit fit_scaling(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw std::invalid_argument("fit_scaling: no records");
  std::map<std::size_t, std::vector<double>> by_size;
  for (const auto& r : records) {
    if (r.engine != records.front().engine) throw std::invalid_argument("fit_scaling: records mix engines");
    if (r.n == 0 || !(r.wall_time > 0.0)) throw std::invalid_argument("fit_scaling: n and wall_time must be positive");
    by_size[r.n].push_back(r.wall_time);
  }
  if (by_size.size() < 4) throw std::invalid_argument("fit_scaling: need at least 4 distinct sizes");

  std::vector<double> xs, ys;
  for (const auto& [n, times] : by_size) {
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(median(times)));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  ScalingFit fit;
  fit.engine = records.front().engine;
  fit.exponent = sxy / sxx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.sizes = by_size.size();
  return fit;
}

/// Records with wall_time = scale * n^exponent exactly, three trials per size.
inline std::vector<BenchRecord> synthetic_records(const std::vector<std::size_t>& sizes, double exponent,
                                                  double scale = 1e-9, std::string engine = "synthetic") {
  std::vector<BenchRecord> out;
  for (std::size_t n : sizes)
    for (std::size_t t = 0; t < 3; ++t)
      out.push_back({engine, n, t, scale * std::pow(static_cast<double>(n), exponent), 0});
  return out;
}

inline constexpr const char* bench_csv_header = "engine,n,trial,wall_time_s,checksum";

inline void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << bench_csv_header << '\n';
  out.precision(9);
  for (const auto& r : records)
    out << r.engine << ',' << r.n << ',' << r.trial << ',' << std::scientific << r.wall_time << std::defaultfloat
        << ',' << r.checksum << '\n';
}

inline nlohmann::json to_json(const ScalingFit& fit) {
  return {{"engine", fit.engine}, {"exponent", fit.exponent}, {"r_squared", fit.r_squared}, {"sizes", fit.sizes}};
}

}  // namespace sethlab
