// This file is part of the semicontour library.
//
// Copyright 2026 The semicontour authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "semicontour/common.hpp"

namespace semicontour {

/// Single-channel raster, row-major.
template <typename T>
struct Image2 {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Image2() = default;
  Image2(int w, int h, T fill = T{}) : width(w), height(h), data(size_t(w) * h, fill) {}

  T& at(int x, int y) { return data[size_t(y) * width + x]; }
  const T& at(int x, int y) const { return data[size_t(y) * width + x]; }

  /// Reflected-border access.
  const T& at_reflect(int x, int y) const {
    return data[size_t(reflect_index(y, height)) * width + reflect_index(x, width)];
  }

  bool empty() const { return width <= 0 || height <= 0; }
};

using PlaneF = Image2<float>;
using Mask = Image2<uint8_t>;  // entries 0/1

/// Per-pixel contour probability in [0, 1].
struct SoftContourMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  SoftContourMap() = default;
  SoftContourMap(int w, int h, double fill = 0.0)
      : width(w), height(h), values(size_t(w) * h, fill) {}

  double& at(int x, int y) { return values[size_t(y) * width + x]; }
  double at(int x, int y) const { return values[size_t(y) * width + x]; }
  bool empty() const { return width <= 0 || height <= 0; }
};

/// RGB image, planar float, values in [0, 1].
struct ImageF {
  PlaneF r, g, b;
  int width() const { return r.width; }
  int height() const { return r.height; }
  bool empty() const { return r.empty(); }
};

/// Bilinear resample with pixel-center alignment. Downscaling by 1/2
/// averages the matching 2x2 block; upsampling interpolates.
template <typename T>
Image2<T> resize_bilinear(const Image2<T>& src, int new_w, int new_h) {
  assert(!src.empty() && new_w > 0 && new_h > 0);
  Image2<T> dst(new_w, new_h);
  const double sx = double(src.width) / new_w;
  const double sy = double(src.height) / new_h;
  for (int y = 0; y < new_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, double(src.height - 1));
    const int y0 = int(fy);
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < new_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, double(src.width - 1));
      const int x0 = int(fx);
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      const double v = (1.0 - wy) * ((1.0 - wx) * src.at(x0, y0) + wx * src.at(x1, y0)) +
                       wy * ((1.0 - wx) * src.at(x0, y1) + wx * src.at(x1, y1));
      dst.at(x, y) = T(v);
    }
  }
  return dst;
}

ImageF resize_image(const ImageF& src, int new_w, int new_h);
SoftContourMap resize_map(const SoftContourMap& src, int new_w, int new_h);

/// PNG I/O. Images load as float RGB in [0, 1] (gray and palette inputs are
/// expanded). Soft maps round-trip through 16-bit grayscale PNG with
/// value = round(p * 65535).
ImageF load_image_png(const std::string& path);
void save_image_png(const std::string& path, const ImageF& img);
Mask load_mask_png(const std::string& path);  // nonzero pixel -> 1
void save_mask_png(const std::string& path, const Mask& mask);
SoftContourMap load_map_png(const std::string& path);
void save_map_png(const std::string& path, const SoftContourMap& map);

}  // namespace semicontour
