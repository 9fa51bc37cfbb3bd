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

#include "areamatch/map_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "areamatch/errors.hpp"

namespace areamatch {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// PGM

int next_pgm_token(std::istream& in) {
  // Skips whitespace and '#' comments, then reads one nonnegative integer.
  char c;
  while (in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {
      }
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      in.unget();
      break;
    }
  }
  int value = -1;
  in >> value;
  if (!in || value < 0) throw FormatError("malformed PGM header");
  return value;
}

GrayImage read_pgm(std::istream& in, bool binary) {
  GrayImage img;
  img.width = next_pgm_token(in);
  img.height = next_pgm_token(in);
  const int maxval = next_pgm_token(in);
  if (img.width <= 0 || img.height <= 0) throw FormatError("PGM with nonpositive dimensions");
  if (maxval <= 0 || maxval > 255) throw FormatError("only 8-bit PGM is supported");
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  img.pixels.resize(n);
  if (binary) {
    in.get();  // single whitespace after maxval
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) throw FormatError("truncated PGM data");
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int v = next_pgm_token(in);
      if (v > maxval) throw FormatError("PGM sample exceeds maxval");
      img.pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

// ---------------------------------------------------------------------------
// PNG

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* file = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (file) std::fclose(file);
  }
};

GrayImage read_png(const std::string& path) {
  PngReadCloser ctx;
  ctx.file = std::fopen(path.c_str(), "rb");
  if (!ctx.file) throw IoError("cannot open " + path);
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw IoError("libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw IoError("libpng init failed");
  if (setjmp(png_jmpbuf(ctx.png))) throw FormatError("corrupt PNG: " + path);

  png_init_io(ctx.png, ctx.file);
  png_read_info(ctx.png, ctx.info);
  const png_uint_32 width = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 height = png_get_image_height(ctx.png, ctx.info);
  const int color_type = png_get_color_type(ctx.png, ctx.info);
  const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
  if (color_type != PNG_COLOR_TYPE_GRAY) {
    throw FormatError("PNG is not grayscale: " + path);
  }
  if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
  if (bit_depth == 16) throw FormatError("only 8-bit grayscale PNG is supported: " + path);
  png_set_interlace_handling(ctx.png);
  png_read_update_info(ctx.png, ctx.info);

  GrayImage img;
  img.width = static_cast<int>(width);
  img.height = static_cast<int>(height);
  img.pixels.resize(static_cast<std::size_t>(width) * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 r = 0; r < height; ++r) {
    rows[r] = img.pixels.data() + static_cast<std::size_t>(r) * width;
  }
  png_read_image(ctx.png, rows.data());
  png_read_end(ctx.png, nullptr);
  return img;
}

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* file = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (file) std::fclose(file);
  }
};

void write_png_rgb(const std::string& path, int width, int height,
                   const std::vector<std::uint8_t>& rgb) {
  PngWriteCloser ctx;
  ctx.file = std::fopen(path.c_str(), "wb");
  if (!ctx.file) throw IoError("cannot write " + path);
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw IoError("libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw IoError("libpng init failed");
  if (setjmp(png_jmpbuf(ctx.png))) throw IoError("PNG write failed: " + path);

  png_init_io(ctx.png, ctx.file);
  png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(ctx.png, ctx.info);
  std::vector<png_bytep> rows(height);
  for (int r = 0; r < height; ++r) {
    rows[r] = const_cast<png_bytep>(rgb.data() + static_cast<std::size_t>(r) * width * 3);
  }
  png_write_image(ctx.png, rows.data());
  png_write_end(ctx.png, nullptr);
}

// ---------------------------------------------------------------------------
// Area-graph JSON schema helpers

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError("expected number at " + where);
  return j.get<double>();
}

Point2 require_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected [x, y] at " + where);
  return {require_number(j[0], where + "/0"), require_number(j[1], where + "/1")};
}

}  // namespace

GrayImage read_gray_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in) throw FormatError("file too short: " + path);
  if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '2')) {
    return read_pgm(in, magic[1] == '5');
  }
  if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
    in.close();
    return read_png(path);
  }
  throw FormatError("unsupported image format (need PGM or grayscale PNG): " + path);
}

void write_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw IoError("short write: " + path);
}

GridMap load_grid_map(const std::string& path, double resolution, int free_threshold,
                      int occupied_threshold) {
  if (!(resolution > 0.0)) throw ConfigError("resolution must be positive");
  if (occupied_threshold <= 0 || free_threshold <= occupied_threshold || free_threshold > 255) {
    throw ConfigError("need 0 < occupied_threshold < free_threshold <= 255");
  }
  const GrayImage img = read_gray_image(path);
  GridMap g(img.width, img.height, resolution);
  for (int r = 0; r < img.height; ++r) {
    // Image row 0 is the top; grid row 0 is the bottom.
    const int grow = img.height - 1 - r;
    for (int c = 0; c < img.width; ++c) {
      const int v = img.at(r, c);
      Occupancy occ = Occupancy::kUnknown;
      if (v >= free_threshold) {
        occ = Occupancy::kFree;
      } else if (v <= occupied_threshold) {
        occ = Occupancy::kOccupied;
      }
      g.set(grow, c, occ);
    }
  }
  return g;
}

void write_grid_map_pgm(const GridMap& g, const std::string& path) {
  GrayImage img;
  img.width = g.width();
  img.height = g.height();
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      std::uint8_t v = 205;
      if (g.at(r, c) == Occupancy::kFree) v = 254;
      if (g.at(r, c) == Occupancy::kOccupied) v = 0;
      img.pixels[static_cast<std::size_t>(g.height() - 1 - r) * img.width + c] = v;
    }
  }
  write_pgm(img, path);
}

AreaGraph read_area_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("expected object at /");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1) {
    throw FormatError("unsupported or missing version at /version");
  }
  AreaGraph g;
  if (!doc.contains("resolution")) throw FormatError("missing field at /resolution");
  g.resolution = require_number(doc["resolution"], "/resolution");
  if (!(g.resolution > 0.0)) throw FormatError("nonpositive value at /resolution");
  if (doc.contains("source_map")) {
    if (!doc["source_map"].is_string()) throw FormatError("expected string at /source_map");
    g.source_map = doc["source_map"].get<std::string>();
  }
  if (!doc.contains("areas") || !doc["areas"].is_array()) {
    throw FormatError("expected array at /areas");
  }

  std::vector<int> seen_ids;
  for (std::size_t i = 0; i < doc["areas"].size(); ++i) {
    const json& ja = doc["areas"][i];
    const std::string base = "/areas/" + std::to_string(i);
    if (!ja.is_object()) throw FormatError("expected object at " + base);
    if (!ja.contains("id") || !ja["id"].is_number_integer()) {
      throw FormatError("expected integer at " + base + "/id");
    }
    const int id = ja["id"].get<int>();
    if (std::find(seen_ids.begin(), seen_ids.end(), id) != seen_ids.end()) {
      throw FormatError("duplicate area id at " + base + "/id");
    }
    seen_ids.push_back(id);

    if (!ja.contains("polygon") || !ja["polygon"].is_array() || ja["polygon"].size() < 3) {
      throw FormatError("expected >= 3 vertices at " + base + "/polygon");
    }
    std::vector<Point2> verts;
    verts.reserve(ja["polygon"].size());
    for (std::size_t v = 0; v < ja["polygon"].size(); ++v) {
      verts.push_back(require_point(ja["polygon"][v], base + "/polygon/" + std::to_string(v)));
    }
    std::vector<Point2> passages;
    if (ja.contains("passages")) {
      if (!ja["passages"].is_array()) throw FormatError("expected array at " + base + "/passages");
      for (std::size_t v = 0; v < ja["passages"].size(); ++v) {
        passages.push_back(
            require_point(ja["passages"][v], base + "/passages/" + std::to_string(v)));
      }
    }
    try {
      Polygon2 poly(std::move(verts));
      for (std::size_t v = 0; v < passages.size(); ++v) {
        if (distance_to_boundary(poly, passages[v]) > 0.5) {
          throw FormatError("passage farther than 0.5 m from the area boundary at " + base +
                            "/passages/" + std::to_string(v));
        }
      }
      g.areas.push_back(Area{id, std::move(poly), std::move(passages), std::nullopt});
    } catch (const DegeneratePolygon& e) {
      throw FormatError(std::string("degenerate polygon at ") + base + "/polygon: " + e.what());
    }
  }

  // Canonical order: ascending id, so matrix indices and tie-breaks follow ids.
  std::sort(g.areas.begin(), g.areas.end(),
            [](const Area& a, const Area& b) { return a.id < b.id; });

  // Adjacency is not serialized; rebuild it from shared passage points.
  constexpr double kShareTol = 0.5;
  for (std::size_t i = 0; i < g.areas.size(); ++i) {
    for (std::size_t j = i + 1; j < g.areas.size(); ++j) {
      for (const Point2& p : g.areas[i].passages) {
        bool linked = false;
        for (const Point2& q : g.areas[j].passages) {
          if (distance(p, q) <= kShareTol) {
            g.adjacency.push_back(
                {g.areas[i].id, g.areas[j].id, {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}});
            linked = true;
            break;
          }
        }
        if (linked) break;
      }
    }
  }
  return g;
}

void write_area_graph(const AreaGraph& g, const std::string& path) {
  json doc;
  doc["version"] = 1;
  doc["resolution"] = g.resolution;
  if (g.source_map) doc["source_map"] = *g.source_map;
  doc["areas"] = json::array();
  for (const Area& a : g.areas) {
    json ja;
    ja["id"] = a.id;
    ja["polygon"] = json::array();
    for (const Point2& p : a.polygon.vertices()) ja["polygon"].push_back({p.x, p.y});
    ja["passages"] = json::array();
    for (const Point2& p : a.passages) ja["passages"].push_back({p.x, p.y});
    doc["areas"].push_back(std::move(ja));
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("short write: " + path);
}

RgbImage compose_alignment(const GridMap& a, const GridMap& b, const RigidTransform2D& t) {
  // Canvas covers B plus the transformed corners of A, at B's resolution.
  const double res = b.resolution();
  double lo_x = b.origin().x;
  double lo_y = b.origin().y;
  double hi_x = b.origin().x + b.width() * res;
  double hi_y = b.origin().y + b.height() * res;
  const double aw = a.width() * a.resolution();
  const double ah = a.height() * a.resolution();
  const Point2 corners[4] = {a.origin(),
                             a.origin() + Point2{aw, 0.0},
                             a.origin() + Point2{0.0, ah},
                             a.origin() + Point2{aw, ah}};
  for (const Point2& c : corners) {
    const Point2 p = apply_rigid(t, c);
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  RgbImage img;
  img.width = std::max(1, static_cast<int>(std::ceil((hi_x - lo_x) / res)));
  img.height = std::max(1, static_cast<int>(std::ceil((hi_y - lo_y) / res)));
  img.resolution = res;
  img.world_min = {lo_x, lo_y};
  if (static_cast<long long>(img.width) * img.height > 64LL * 1024 * 1024) {
    throw ConfigError("render canvas too large; check the transform");
  }

  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height * 3, 255);
  auto pixel = [&](Point2 world) -> std::uint8_t* {
    const int col = static_cast<int>(std::floor((world.x - lo_x) / res));
    const int row = static_cast<int>(std::floor((world.y - lo_y) / res));
    if (col < 0 || col >= img.width || row < 0 || row >= img.height) return nullptr;
    // Image rows run top-down.
    const std::size_t idx =
        (static_cast<std::size_t>(img.height - 1 - row) * img.width + col) * 3;
    return &img.pixels[idx];
  };

  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      if (b.at(r, c) != Occupancy::kOccupied) continue;
      if (std::uint8_t* px = pixel(b.cell_center(r, c))) {
        px[0] = px[1] = px[2] = 128;
      }
    }
  }
  for (int r = 0; r < a.height(); ++r) {
    for (int c = 0; c < a.width(); ++c) {
      if (a.at(r, c) != Occupancy::kOccupied) continue;
      if (std::uint8_t* px = pixel(apply_rigid(t, a.cell_center(r, c)))) {
        // Red at 50% alpha over whatever is underneath.
        px[0] = static_cast<std::uint8_t>((px[0] + 255) / 2);
        px[1] = static_cast<std::uint8_t>(px[1] / 2);
        px[2] = static_cast<std::uint8_t>(px[2] / 2);
      }
    }
  }
  return img;
}

void render_alignment(const GridMap& a, const GridMap& b, const RigidTransform2D& t,
                      const std::string& path) {
  const RgbImage img = compose_alignment(a, b, t);
  write_png_rgb(path, img.width, img.height, img.pixels);
}

}  // namespace areamatch
