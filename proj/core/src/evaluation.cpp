// Copyright 2026 The AreaMatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "areamatch/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "areamatch/errors.hpp"
#include "areamatch/segmentation.hpp"

namespace areamatch {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

EvalReport evaluate(const RigidTransform2D& result, const RigidTransform2D& expected,
                    double tol_deg, double tol_m, Point2 reference) {
  EvalReport r;
  r.tol_deg = tol_deg;
  r.tol_m = tol_m;
  r.rotation_error_deg = rad_to_deg(circular_distance(result.theta, expected.theta));
  r.translation_error_m = distance(apply_rigid(result, reference), apply_rigid(expected, reference));
  r.success = r.rotation_error_deg <= tol_deg && r.translation_error_m <= tol_m;
  return r;
}

EvalReport evaluate(const MatchResult& result, const RigidTransform2D& expected, double tol_deg,
                    double tol_m, Point2 reference) {
  return evaluate(result.transform, expected, tol_deg, tol_m, reference);
}

Point2 free_space_centroid(const GridMap& g) {
  double sx = 0.0, sy = 0.0;
  std::size_t n = 0;
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      if (g.at(r, c) == Occupancy::kFree) {
        const Point2 p = g.cell_center(r, c);
        sx += p.x;
        sy += p.y;
        ++n;
      }
    }
  }
  if (n == 0) {
    return g.cell_center(g.height() / 2, g.width() / 2);
  }
  return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
}

BenchTable bench(std::span<const BenchInput> pairs, int repeats, const MatchConfig& config,
                 double tol_deg, double tol_m) {
  if (pairs.empty()) throw ConfigError("bench needs at least one map pair");
  if (repeats < 1) throw ConfigError("bench needs at least one repeat");

  BenchTable table;
  for (const BenchInput& input : pairs) {
    BenchRow row;
    row.name = input.name;

    const auto t_pair = Clock::now();
    const auto t_seg = Clock::now();
    const AreaGraph ga = segment_grid_map(input.a, config.width_param);
    const AreaGraph gb = segment_grid_map(input.b, config.width_param);
    row.segmentation_s = seconds_since(t_seg);

    const Point2 centroid = free_space_centroid(input.a);
    int successes = 0;
    double matching_total = 0.0;
    for (int rep = 0; rep < repeats; ++rep) {
      MatchConfig cfg = config;
      cfg.seed = (config.seed ? *config.seed : 0) + static_cast<std::uint64_t>(rep);
      try {
        const MatchResult res = match_maps(ga, gb, cfg);
        matching_total += res.timings.matching_s;
        if (input.expected &&
            evaluate(res, *input.expected, tol_deg, tol_m, centroid).success) {
          ++successes;
        }
      } catch (const MatchFailed&) {
        // A failed repeat counts against correctness but not the timing mean.
      }
    }
    row.matching_s = matching_total / repeats;
    const double elapsed = seconds_since(t_pair);
    // Total = segmentation + mean matching + the per-repeat remainder
    // (bookkeeping and evaluation), never less than the parts.
    const double remainder =
        std::max(0.0, (elapsed - row.segmentation_s) / repeats - row.matching_s);
    row.total_s = row.segmentation_s + row.matching_s + remainder;
    row.correctness_pct = input.expected ? 100.0 * successes / repeats : -1.0;
    table.rows.push_back(std::move(row));
  }

  BenchRow avg;
  avg.name = "Average";
  double corr_sum = 0.0;
  int corr_n = 0;
  for (const BenchRow& row : table.rows) {
    avg.segmentation_s += row.segmentation_s;
    avg.matching_s += row.matching_s;
    avg.total_s += row.total_s;
    if (row.correctness_pct >= 0) {
      corr_sum += row.correctness_pct;
      ++corr_n;
    }
  }
  const double n = static_cast<double>(table.rows.size());
  avg.segmentation_s /= n;
  avg.matching_s /= n;
  avg.total_s /= n;
  avg.correctness_pct = corr_n > 0 ? corr_sum / corr_n : -1.0;
  table.average = std::move(avg);
  return table;
}

std::string format_bench_table(const BenchTable& table) {
  const std::string row_names[4] = {"Segmentation Time (s)", "Matching Time (s)",
                                    "Total Time (s)", "Correctness (%)"};
  std::vector<std::string> headers{""};
  for (const BenchRow& r : table.rows) headers.push_back(r.name);
  headers.push_back(table.average.name);

  auto cell = [&](const BenchRow& r, int kind) -> std::string {
    switch (kind) {
      case 0: return fixed(r.segmentation_s, 3);
      case 1: return fixed(r.matching_s, 3);
      case 2: return fixed(r.total_s, 3);
      default: return r.correctness_pct < 0 ? "-" : fixed(r.correctness_pct, 1);
    }
  };

  std::vector<std::vector<std::string>> grid;
  grid.push_back(headers);
  for (int kind = 0; kind < 4; ++kind) {
    std::vector<std::string> row{row_names[kind]};
    for (const BenchRow& r : table.rows) row.push_back(cell(r, kind));
    row.push_back(cell(table.average, kind));
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ");
      out << row[c];
      out << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string bench_table_csv(const BenchTable& table) {
  std::ostringstream out;
  out << "pair,segmentation_s,matching_s,total_s,correctness_pct\n";
  auto emit = [&](const BenchRow& r) {
    out << r.name << "," << fixed(r.segmentation_s, 6) << "," << fixed(r.matching_s, 6) << ","
        << fixed(r.total_s, 6) << ","
        << (r.correctness_pct < 0 ? std::string("") : fixed(r.correctness_pct, 2)) << "\n";
  };
  for (const BenchRow& r : table.rows) emit(r);
  emit(table.average);
  return out.str();
}

}  // namespace areamatch
