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
//
// areamatch: segment occupancy grids into area graphs, match two maps by
// area features, and recover the rigid transform between them.
//
// Exit codes: 0 success, 2 input error, 3 match failure, 4 config error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "areamatch/errors.hpp"
#include "areamatch/evaluation.hpp"
#include "areamatch/map_io.hpp"
#include "areamatch/segmentation.hpp"
#include "areamatch/synthetic.hpp"
#include "areamatch/transform_estimation.hpp"
#include "areamatch/weight_sweep.hpp"

namespace {

using areamatch::AreaGraph;
using areamatch::GridMap;
using areamatch::MatchConfig;
using areamatch::MatchResult;
using areamatch::Point2;
using areamatch::RigidTransform2D;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMatchFailed = 3;
constexpr int kExitConfig = 4;

struct Options {
  MatchConfig cfg;
  double resolution_a = 0.0;
  double resolution_b = 0.0;
  int free_threshold = 250;
  int occupied_threshold = 50;
  int jobs = 1;
};

struct LoadedMap {
  std::optional<GridMap> grid;
  std::optional<AreaGraph> graph;
};

bool has_extension(const std::string& path, std::initializer_list<const char*> exts) {
  std::string ext = std::filesystem::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const char* e : exts) {
    if (ext == e) return true;
  }
  return false;
}

LoadedMap load_map_input(const std::string& path, double resolution, const Options& opt) {
  LoadedMap out;
  if (has_extension(path, {".areagraph", ".json"})) {
    out.graph = areamatch::read_area_graph(path);
    return out;
  }
  if (has_extension(path, {".pgm", ".png"})) {
    if (!(resolution > 0.0)) {
      throw areamatch::ConfigError("grid map input " + path + " needs --resolution (m/cell)");
    }
    out.grid =
        areamatch::load_grid_map(path, resolution, opt.free_threshold, opt.occupied_threshold);
    return out;
  }
  throw areamatch::ConfigError("unrecognized map extension (use .pgm/.png/.areagraph): " + path);
}

json transform_to_json(const RigidTransform2D& t) {
  return json{{"theta_rad", t.theta}, {"t", {t.t.x, t.t.y}}};
}

RigidTransform2D transform_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("theta_rad") || !j.contains("t") || !j["t"].is_array() ||
      j["t"].size() != 2) {
    throw areamatch::FormatError("expected {theta_rad, t: [x, y]} at " + where);
  }
  return {j["theta_rad"].get<double>(),
          {j["t"][0].get<double>(), j["t"][1].get<double>()}};
}

json result_to_json(const MatchResult& r, bool with_timings) {
  json pairs = json::array();
  for (const auto& p : r.matched_pairs) pairs.push_back({p.area_id_a, p.area_id_b});
  json j = transform_to_json(r.transform);
  j["overlap_sum"] = r.overlap_sum;
  j["best_cluster_size"] = r.best_cluster_size;
  j["matched_pairs"] = std::move(pairs);
  if (with_timings) {
    j["timings"] = {{"segmentation_s", r.timings.segmentation_s},
                    {"matching_s", r.timings.matching_s},
                    {"total_s", r.timings.total_s}};
  }
  return j;
}

void print_timings(const MatchResult& r) {
  std::cerr << "segmentation: " << r.timings.segmentation_s << " s, matching: "
            << r.timings.matching_s << " s, total: " << r.timings.total_s << " s\n";
}

void write_or_print(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw areamatch::IoError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

// AREAMATCH_CONFIG may name a JSON file with defaults for the common
// parameters; explicit flags still win.
void apply_env_config(Options& opt) {
  const char* path = std::getenv("AREAMATCH_CONFIG");
  if (!path || !*path) return;
  std::ifstream in(path);
  if (!in) throw areamatch::ConfigError(std::string("AREAMATCH_CONFIG unreadable: ") + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw areamatch::ConfigError(std::string("AREAMATCH_CONFIG invalid JSON: ") + e.what());
  }
  if (j.contains("width")) opt.cfg.width_param = j["width"].get<double>();
  if (j.contains("k")) opt.cfg.k = j["k"].get<int>();
  if (j.contains("weights") && j["weights"].is_array() && j["weights"].size() == 3) {
    opt.cfg.weights = areamatch::WeightVector::normalized(
        j["weights"][0].get<double>(), j["weights"][1].get<double>(),
        j["weights"][2].get<double>());
  }
  if (j.contains("angle_threshold_deg")) {
    opt.cfg.angle_threshold = areamatch::deg_to_rad(j["angle_threshold_deg"].get<double>());
  }
  if (j.contains("overlap_threshold")) {
    opt.cfg.overlap_threshold = j["overlap_threshold"].get<double>();
  }
}

std::vector<std::pair<int, int>> read_gt_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw areamatch::IoError("cannot open " + path);
  std::vector<std::pair<int, int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw areamatch::FormatError("expected 'id_a,id_b' lines in " + path);
    }
    try {
      out.emplace_back(std::stoi(line.substr(0, comma)), std::stoi(line.substr(comma + 1)));
    } catch (const std::exception&) {
      if (out.empty() && line.find("id") != std::string::npos) continue;  // header
      throw areamatch::FormatError("bad ground-truth pair line: " + line);
    }
  }
  return out;
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------

int cmd_segment(const std::string& map_path, const std::string& out_path, const Options& opt) {
  const GridMap grid = areamatch::load_grid_map(map_path, opt.resolution_a, opt.free_threshold,
                                                opt.occupied_threshold);
  AreaGraph graph = areamatch::segment_grid_map(grid, opt.cfg.width_param);
  if (graph.areas.size() < 2) {
    std::cerr << "warning: segmentation produced a single area; matching will rely on hull"
                 " features\n";
  }
  graph.source_map = map_path;
  areamatch::write_area_graph(graph, out_path);
  std::cerr << "wrote " << out_path << " (" << graph.areas.size() << " areas)\n";
  return kExitOk;
}

int cmd_match(const std::string& path_a, const std::string& path_b, const Options& opt,
              const std::string& out_path, const std::string& render_path, bool with_timings) {
  const LoadedMap a = load_map_input(path_a, opt.resolution_a, opt);
  const LoadedMap b = load_map_input(path_b, opt.resolution_b, opt);
  areamatch::MapInput ia{a.grid ? &*a.grid : nullptr, a.graph ? &*a.graph : nullptr};
  areamatch::MapInput ib{b.grid ? &*b.grid : nullptr, b.graph ? &*b.graph : nullptr};

  const MatchResult result = areamatch::match_maps(ia, ib, opt.cfg);
  print_timings(result);
  write_or_print(result_to_json(result, with_timings), out_path);

  if (!render_path.empty()) {
    if (!a.grid || !b.grid) {
      throw areamatch::ConfigError("--render needs both inputs as grid maps");
    }
    areamatch::render_alignment(*a.grid, *b.grid, result.transform, render_path);
    std::cerr << "wrote " << render_path << "\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& result_path, const std::string& gt_path, double tol_deg,
             double tol_m, const std::string& map_a_path, const Options& opt,
             const std::string& out_path) {
  auto read_json_file = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw areamatch::IoError("cannot open " + path);
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw areamatch::FormatError("invalid JSON in " + path + ": " + e.what());
    }
  };
  const json jr = read_json_file(result_path);
  json jg = read_json_file(gt_path);
  // Ground-truth files may carry the transform under "a_to_b" (synth output).
  if (jg.is_object() && jg.contains("a_to_b")) jg = jg["a_to_b"];

  const RigidTransform2D result = transform_from_json(jr, result_path);
  const RigidTransform2D expected = transform_from_json(jg, gt_path);

  Point2 reference{};
  double tol = tol_m;
  if (!map_a_path.empty()) {
    const GridMap grid = areamatch::load_grid_map(map_a_path, opt.resolution_a,
                                                  opt.free_threshold, opt.occupied_threshold);
    reference = areamatch::free_space_centroid(grid);
    if (tol <= 0) tol = 2.0 * grid.resolution();
  }
  if (tol <= 0) tol = 0.2;

  const areamatch::EvalReport report = areamatch::evaluate(result, expected, tol_deg, tol, reference);
  json j{{"rotation_error_deg", report.rotation_error_deg},
         {"translation_error_m", report.translation_error_m},
         {"success", report.success},
         {"tol_deg", report.tol_deg},
         {"tol_m", report.tol_m}};
  write_or_print(j, out_path);
  return kExitOk;
}

int cmd_synth(const std::string& out_dir, areamatch::SyntheticSpec spec, bool random_transform,
              double theta_deg, double tx, double ty) {
  if (random_transform) {
    std::mt19937_64 rng(spec.seed ^ 0xda3e39cb94b95bdbULL);
    const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * unit_draw(rng);
    const double rx = -5.0 + 10.0 * unit_draw(rng);
    const double ry = -5.0 + 10.0 * unit_draw(rng);
    spec.gt = {areamatch::normalize_angle(theta), {rx, ry}};
  } else {
    spec.gt = {areamatch::deg_to_rad(theta_deg), {tx, ty}};
  }

  const areamatch::SyntheticPair pair = areamatch::generate_synthetic_pair(spec);
  std::filesystem::create_directories(out_dir);
  const std::string map_a = out_dir + "/map_a.pgm";
  const std::string map_b = out_dir + "/map_b.pgm";
  const std::string gt_path = out_dir + "/gt.json";
  areamatch::write_grid_map_pgm(pair.a, map_a);
  areamatch::write_grid_map_pgm(pair.b, map_b);

  // PGM files carry no origin, so the written ground truth is expressed in
  // the frames the files load back into (origins at zero).
  const RigidTransform2D shift_a{0.0, pair.a.origin()};
  const RigidTransform2D unshift_b{0.0, {-pair.b.origin().x, -pair.b.origin().y}};
  const RigidTransform2D file_a_to_b =
      areamatch::compose(unshift_b, areamatch::compose(pair.gt.inverse(), shift_a));

  json j{{"resolution", spec.resolution},
         {"map_a", map_a},
         {"map_b", map_b},
         {"a_to_b", transform_to_json(file_a_to_b)},
         {"b_to_a", transform_to_json(file_a_to_b.inverse())}};
  std::ofstream out(gt_path);
  if (!out) throw areamatch::IoError("cannot write " + gt_path);
  out << j.dump(2) << "\n";
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& map_paths, int synthetic, int repeats,
              const Options& opt, const std::string& csv_path) {
  std::vector<areamatch::BenchInput> inputs;
  if (synthetic > 0) {
    std::mt19937_64 rng((opt.cfg.seed ? *opt.cfg.seed : 1) ^ 0xda3e39cb94b95bdbULL);
    for (int i = 0; i < synthetic; ++i) {
      areamatch::SyntheticSpec spec;
      spec.seed = (opt.cfg.seed ? *opt.cfg.seed : 1) + static_cast<std::uint64_t>(i);
      spec.noise.dropout = 0.02;
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * unit_draw(rng);
      spec.gt = {areamatch::normalize_angle(theta),
                 {-5.0 + 10.0 * unit_draw(rng), -5.0 + 10.0 * unit_draw(rng)}};
      areamatch::SyntheticPair pair = areamatch::generate_synthetic_pair(spec);
      inputs.push_back({"synth" + std::to_string(i), std::move(pair.a), std::move(pair.b),
                        pair.gt.inverse()});
    }
  }
  if (map_paths.size() % 2 != 0) {
    throw areamatch::ConfigError("bench expects map pairs (an even number of paths)");
  }
  for (std::size_t i = 0; i + 1 < map_paths.size(); i += 2) {
    const GridMap a = areamatch::load_grid_map(map_paths[i], opt.resolution_a,
                                               opt.free_threshold, opt.occupied_threshold);
    const GridMap b = areamatch::load_grid_map(map_paths[i + 1], opt.resolution_b,
                                               opt.free_threshold, opt.occupied_threshold);
    inputs.push_back({std::filesystem::path(map_paths[i]).stem().string(), a, b, std::nullopt});
  }
  if (inputs.empty()) {
    throw areamatch::ConfigError("bench needs map pairs or --synthetic N");
  }

  double tol_m = 2.0 * (inputs[0].a.resolution());
  const areamatch::BenchTable table = areamatch::bench(inputs, repeats, opt.cfg, 3.0, tol_m);
  std::cout << areamatch::format_bench_table(table);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw areamatch::IoError("cannot write " + csv_path);
    out << areamatch::bench_table_csv(table);
  }
  return kExitOk;
}

int cmd_sweep(const std::string& path_a, const std::string& path_b, double step,
              const std::string& gt_path, bool gt_identity, const Options& opt,
              const std::string& out_path) {
  const LoadedMap la = load_map_input(path_a, opt.resolution_a, opt);
  const LoadedMap lb = load_map_input(path_b, opt.resolution_b, opt);
  const AreaGraph ga =
      la.graph ? *la.graph : areamatch::segment_grid_map(*la.grid, opt.cfg.width_param);
  const AreaGraph gb =
      lb.graph ? *lb.graph : areamatch::segment_grid_map(*lb.grid, opt.cfg.width_param);

  std::vector<std::pair<int, int>> gt;
  if (!gt_path.empty()) {
    gt = read_gt_pairs(gt_path);
  } else if (gt_identity) {
    for (const auto& area : ga.areas) {
      if (gb.find(area.id)) gt.emplace_back(area.id, area.id);
    }
  } else {
    throw areamatch::ConfigError("sweep needs --gt <csv> or --gt-identity");
  }

  const auto points = areamatch::weight_sweep(ga, gb, gt, step, opt.cfg, opt.jobs);
  std::ostringstream csv;
  csv << "w_a,w_p,w_l,correctness\n";
  char buf[128];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f,%.2f,%.6f\n", p.wa, p.wp, p.wl, p.correctness);
    csv << buf;
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw areamatch::IoError("cannot write " + out_path);
    out << csv.str();
  }
  std::cerr << "swept " << points.size() << " weight vectors\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"areamatch: match 2D maps by area-graph features"};
  app.require_subcommand(1);

  Options opt;
  double weights[3] = {0.1, 0.1, 0.8};
  double angle_threshold_deg = 3.0;
  std::uint64_t seed = 0;
  bool seed_set = false;

  // Shared knobs registered on each subcommand that needs them.
  auto add_common = [&](CLI::App* sub, bool matching_flags) {
    sub->add_option("--resolution", opt.resolution_a,
                    "grid resolution (m/cell) for both maps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--width", opt.cfg.width_param, "segmentation width parameter (m)")
        ->capture_default_str();
    sub->add_option("--free-threshold", opt.free_threshold, "pixel >= value is free")
        ->capture_default_str();
    sub->add_option("--occupied-threshold", opt.occupied_threshold, "pixel <= value is occupied")
        ->capture_default_str();
    if (matching_flags) {
      sub->add_option("--k", opt.cfg.k, "mutual k-NN depth")->capture_default_str();
      sub->add_option("--weights", [&weights](const std::vector<std::string>& vals) {
            // comma separated: wa,wp,wl
            std::stringstream ss(vals.back());
            std::string tok;
            int i = 0;
            while (std::getline(ss, tok, ',') && i < 3) weights[i++] = std::stod(tok);
            return i == 3;
          },
          "feature weights wa,wp,wl (normalized to unit sum)");
      sub->add_option("--angle-threshold-deg", angle_threshold_deg,
                      "rotation cluster radius (degrees)")
          ->capture_default_str();
      sub->add_option("--overlap-threshold", opt.cfg.overlap_threshold,
                      "hypothesis verification overlap")
          ->capture_default_str();
      sub->add_flag("--score-cluster-pairs-only", opt.cfg.score_cluster_pairs_only,
                    "score only the best cluster's own pairs");
    }
    sub->add_option("--seed", [&seed, &seed_set](const std::vector<std::string>& vals) {
          seed = std::stoull(vals.back());
          seed_set = true;
          return true;
        },
        "seed for order permutation / generation");
    sub->add_option("--jobs", opt.jobs, "worker threads where supported")->capture_default_str();
  };

  // segment
  auto* seg = app.add_subcommand("segment", "segment a grid map into an area graph");
  std::string seg_map, seg_out;
  seg->add_option("map", seg_map, "grid map (.pgm/.png)")->required();
  seg->add_option("--out", seg_out, "output .areagraph path")->required();
  add_common(seg, false);

  // match
  auto* match = app.add_subcommand("match", "match two maps and print the rigid transform");
  std::string match_a, match_b, match_out, match_render;
  bool match_timings = false;
  double res_b_flag = 0.0;
  match->add_option("map_a", match_a, "map A (.pgm/.png/.areagraph)")->required();
  match->add_option("map_b", match_b, "map B (.pgm/.png/.areagraph)")->required();
  match->add_option("--out", match_out, "write the result JSON here as well");
  match->add_option("--render", match_render, "write an alignment overlay PNG");
  match->add_flag("--timings", match_timings, "embed phase timings in the result JSON");
  match->add_option("--resolution-b", res_b_flag, "resolution for map B when it differs")
      ->check(CLI::PositiveNumber);
  add_common(match, true);

  // eval
  auto* eval = app.add_subcommand("eval", "compare a match result against ground truth");
  std::string eval_result, eval_gt, eval_map_a, eval_out;
  double eval_tol_deg = 3.0, eval_tol_m = 0.0;
  eval->add_option("--result", eval_result, "match result JSON")->required();
  eval->add_option("--gt", eval_gt, "ground-truth transform JSON")->required();
  eval->add_option("--tol-deg", eval_tol_deg, "rotation tolerance (degrees)")
      ->capture_default_str();
  eval->add_option("--tol-m", eval_tol_m, "translation tolerance (m); default 2 cells");
  eval->add_option("--map-a", eval_map_a, "map A grid for the centroid reference point");
  eval->add_option("--out", eval_out, "write the report JSON here instead of stdout");
  add_common(eval, false);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "timing and correctness table over map pairs");
  std::vector<std::string> bench_maps;
  int bench_synth = 0, bench_repeats = 20;
  std::string bench_csv;
  bench_cmd->add_option("maps", bench_maps, "grid map pairs: a1 b1 [a2 b2 ...]");
  bench_cmd->add_option("--synthetic", bench_synth, "generate N synthetic pairs instead");
  bench_cmd->add_option("--repeats", bench_repeats, "matching repeats per pair")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_csv, "also write the table as CSV");
  add_common(bench_cmd, true);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "weight-vector sweep heatmap data");
  std::string sweep_a, sweep_b, sweep_gt, sweep_out;
  double sweep_step = 0.01;
  bool sweep_identity = false;
  sweep->add_option("map_a", sweep_a, "map A (.pgm/.png/.areagraph)")->required();
  sweep->add_option("map_b", sweep_b, "map B (.pgm/.png/.areagraph)")->required();
  sweep->add_option("--step", sweep_step, "simplex lattice step")->capture_default_str();
  sweep->add_option("--gt", sweep_gt, "ground-truth pair CSV (id_a,id_b)");
  sweep->add_flag("--gt-identity", sweep_identity, "ground truth pairs map each id to itself");
  sweep->add_option("--out", sweep_out, "write heatmap CSV here instead of stdout");
  add_common(sweep, true);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic map pair with ground truth");
  areamatch::SyntheticSpec synth_spec;
  std::string synth_dir;
  double synth_theta = 0.0, synth_tx = 0.0, synth_ty = 0.0;
  bool synth_random = false;
  synth->add_option("--out-dir", synth_dir, "output directory")->required();
  synth->add_option("--rooms-x", synth_spec.rooms_x, "rooms per row")->capture_default_str();
  synth->add_option("--rooms-y", synth_spec.rooms_y, "room rows (1 or 2)")->capture_default_str();
  synth->add_option("--room-width", synth_spec.room_width, "base room width (m)")
      ->capture_default_str();
  synth->add_option("--room-depth", synth_spec.room_depth, "base room depth (m)")
      ->capture_default_str();
  synth->add_option("--corridor-width", synth_spec.corridor_width, "corridor width (m)")
      ->capture_default_str();
  synth->add_option("--door-width", synth_spec.door_width, "door width (m)")
      ->capture_default_str();
  synth->add_option("--synth-resolution", synth_spec.resolution, "map resolution (m/cell)")
      ->capture_default_str();
  synth->add_option("--dropout", synth_spec.noise.dropout, "occupied-cell dropout fraction")
      ->capture_default_str();
  synth->add_option("--speckle", synth_spec.noise.speckle, "free-cell speckle fraction")
      ->capture_default_str();
  synth->add_option("--theta-deg", synth_theta, "ground-truth rotation (B into A, degrees)");
  synth->add_option("--tx", synth_tx, "ground-truth translation x (m)");
  synth->add_option("--ty", synth_ty, "ground-truth translation y (m)");
  synth->add_flag("--random-transform", synth_random, "draw the transform from the seed");
  add_common(synth, false);

  try {
    apply_env_config(opt);
    app.parse(argc, argv);

    opt.cfg.weights = areamatch::WeightVector::normalized(weights[0], weights[1], weights[2]);
    opt.cfg.angle_threshold = areamatch::deg_to_rad(angle_threshold_deg);
    if (seed_set) opt.cfg.seed = seed;
    if (res_b_flag > 0) {
      opt.resolution_b = res_b_flag;
    } else {
      opt.resolution_b = opt.resolution_a;
    }
    if (!(opt.cfg.width_param > 0)) throw areamatch::ConfigError("--width must be positive");
    if (opt.cfg.k < 1) throw areamatch::ConfigError("--k must be at least 1");

    if (seg->parsed()) return cmd_segment(seg_map, seg_out, opt);
    if (match->parsed()) {
      return cmd_match(match_a, match_b, opt, match_out, match_render, match_timings);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_result, eval_gt, eval_tol_deg, eval_tol_m, eval_map_a, opt, eval_out);
    }
    if (bench_cmd->parsed()) {
      if (seed_set) opt.cfg.seed = seed;
      return cmd_bench(bench_maps, bench_synth, bench_repeats, opt, bench_csv);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_a, sweep_b, sweep_step, sweep_gt, sweep_identity, opt, sweep_out);
    }
    if (synth->parsed()) {
      synth_spec.seed = seed_set ? seed : 1;
      return cmd_synth(synth_dir, synth_spec, synth_random, synth_theta, synth_tx, synth_ty);
    }
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  } catch (const areamatch::MatchFailed& e) {
    const auto& d = e.diagnostics();
    std::cerr << "match failed: " << e.what() << " (areas " << d.areas_a << "x" << d.areas_b
              << ", mutual pairs " << d.mutual_pairs << ", verified " << d.verified_pairs
              << ", hypotheses " << d.hypotheses << ", clusters " << d.clusters << ")\n";
    return kExitMatchFailed;
  } catch (const areamatch::NoHypothesesError& e) {
    std::cerr << "match failed: " << e.what() << "\n";
    return kExitMatchFailed;
  } catch (const areamatch::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const areamatch::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const areamatch::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const areamatch::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const areamatch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
