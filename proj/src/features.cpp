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

#include "semicontour/features.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "semicontour/serialize.hpp"

namespace semicontour {

namespace {
constexpr uint32_t kChannelsMagic = 0x53434348u;  // "SCCH"
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void FeatureConfig::validate() const {
  if (patch_size < 4 || patch_size % 2 != 0) {
    throw std::invalid_argument("patch_size must be even and >= 4");
  }
  if (scales.empty() || scales.front() != 1.0) {
    throw std::invalid_argument("scales must start with 1.0");
  }
  for (size_t i = 1; i < scales.size(); ++i) {
    if (!(scales[i] < scales[i - 1]) || scales[i] <= 0.0) {
      throw std::invalid_argument("scales must be strictly decreasing and positive");
    }
  }
  if (orientation_bins < 1) throw std::invalid_argument("orientation_bins must be >= 1");
  if (plane_count() != 13) {
    throw std::invalid_argument("scales/orientation_bins must yield 13 planes");
  }
}

void rgb_to_luv(float r, float g, float b, float& l_out, float& u_out, float& v_out) {
  const double R = std::clamp(double(r), 0.0, 1.0);
  const double G = std::clamp(double(g), 0.0, 1.0);
  const double B = std::clamp(double(b), 0.0, 1.0);
  // linear RGB -> XYZ, sRGB primaries, D65 white
  const double X = 0.4124564 * R + 0.3575761 * G + 0.1804375 * B;
  const double Y = 0.2126729 * R + 0.7151522 * G + 0.0721750 * B;
  const double Z = 0.0193339 * R + 0.1191920 * G + 0.9503041 * B;
  constexpr double Xn = 0.95047, Yn = 1.0, Zn = 1.08883;
  constexpr double un = 4.0 * Xn / (Xn + 15.0 * Yn + 3.0 * Zn);
  constexpr double vn = 9.0 * Yn / (Xn + 15.0 * Yn + 3.0 * Zn);
  const double yr = Y / Yn;
  constexpr double eps = 216.0 / 24389.0;   // (6/29)^3
  constexpr double kappa = 24389.0 / 27.0;  // (29/3)^3
  const double L = yr > eps ? 116.0 * std::cbrt(yr) - 16.0 : kappa * yr;
  const double denom = X + 15.0 * Y + 3.0 * Z;
  const double up = denom > 0.0 ? 4.0 * X / denom : un;
  const double vp = denom > 0.0 ? 9.0 * Y / denom : vn;
  l_out = float(L);
  u_out = float(13.0 * L * (up - un));
  v_out = float(13.0 * L * (vp - vn));
}

namespace {

// Gradient magnitude plus soft orientation binning over [0, pi). The bin
// planes partition the magnitude exactly: each pixel's magnitude is split
// linearly between its two nearest orientation bins.
void gradient_planes(const PlaneF& src, int bins, PlaneF& mag, std::vector<PlaneF>& orient) {
  const int w = src.width, h = src.height;
  mag = PlaneF(w, h);
  orient.assign(size_t(bins), PlaneF(w, h));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float gx = 0.5f * (src.at_reflect(x + 1, y) - src.at_reflect(x - 1, y));
      const float gy = 0.5f * (src.at_reflect(x, y + 1) - src.at_reflect(x, y - 1));
      const double m = std::sqrt(double(gx) * gx + double(gy) * gy);
      mag.at(x, y) = float(m);
      if (m <= 0.0) continue;
      double theta = std::atan2(double(gy), double(gx));
      if (theta < 0.0) theta += kPi;
      if (theta >= kPi) theta -= kPi;
      const double pos = theta / kPi * bins;
      int b0 = int(pos);
      if (b0 >= bins) b0 = bins - 1;
      const double frac = pos - b0;
      const int b1 = (b0 + 1) % bins;
      orient[b0].at(x, y) += float(m * (1.0 - frac));
      orient[b1].at(x, y) += float(m * frac);
    }
  }
}

}  // namespace

ImageChannels compute_channels(const ImageF& image, const FeatureConfig& config,
                               const SoftContourMap* weak_map) {
  config.validate();
  if (image.empty()) throw std::invalid_argument("compute_channels: empty image");
  const bool weak = config.gradient_source == GradientSource::weak_detector;
  if (weak && weak_map == nullptr) {
    throw std::invalid_argument("compute_channels: weak_detector source requires a weak map");
  }
  if (!weak && weak_map != nullptr) {
    throw std::invalid_argument("compute_channels: weak map given but gradient source is raw");
  }
  const int w = image.width(), h = image.height();
  if (weak && (weak_map->width != w || weak_map->height != h)) {
    throw std::invalid_argument("compute_channels: weak map size mismatch");
  }

  ImageChannels out;
  out.width = w;
  out.height = h;
  out.planes.reserve(size_t(config.plane_count()));

  PlaneF L(w, h), U(w, h), V(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      rgb_to_luv(image.r.at(x, y), image.g.at(x, y), image.b.at(x, y), L.at(x, y), U.at(x, y),
                 V.at(x, y));
    }
  }

  // gradient source plane: weak detector soft map, or normalized luminance
  PlaneF source(w, h);
  if (weak) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) source.at(x, y) = float(weak_map->at(x, y));
    }
  } else {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) source.at(x, y) = L.at(x, y) / 100.0f;
    }
  }

  out.planes.push_back(std::move(L));
  out.tags.emplace_back("luv_L");
  out.planes.push_back(std::move(U));
  out.tags.emplace_back("luv_u");
  out.planes.push_back(std::move(V));
  out.tags.emplace_back("luv_v");

  for (size_t si = 0; si < config.scales.size(); ++si) {
    const double s = config.scales[si];
    PlaneF scaled;
    if (s == 1.0) {
      scaled = source;
    } else {
      const int sw = std::max(1, int(std::lround(w * s)));
      const int sh = std::max(1, int(std::lround(h * s)));
      scaled = resize_bilinear(source, sw, sh);
    }
    PlaneF mag;
    std::vector<PlaneF> orient;
    gradient_planes(scaled, config.orientation_bins, mag, orient);
    if (scaled.width != w || scaled.height != h) {
      mag = resize_bilinear(mag, w, h);
      for (auto& o : orient) o = resize_bilinear(o, w, h);
    }
    out.planes.push_back(std::move(mag));
    out.tags.push_back("grad_mag_scale_" + std::to_string(si));
    for (int b = 0; b < config.orientation_bins; ++b) {
      out.planes.push_back(std::move(orient[size_t(b)]));
      out.tags.push_back("grad_orient_bin_" + std::to_string(b) + "_scale_" + std::to_string(si));
    }
  }
  return out;
}

float feature_at(const ImageChannels& channels, int cx, int cy, uint32_t k, int m) {
  const uint32_t per_plane = uint32_t(m) * uint32_t(m);
  const uint32_t plane = k / per_plane;
  const uint32_t rem = k % per_plane;
  const int dy = int(rem / uint32_t(m));
  const int dx = int(rem % uint32_t(m));
  return channels.planes[plane].at_reflect(cx - m / 2 + dx, cy - m / 2 + dy);
}

std::vector<float> extract_patch_vector(const ImageChannels& channels, int cx, int cy, int m) {
  std::vector<float> v;
  v.reserve(channels.planes.size() * size_t(m) * size_t(m));
  const int x0 = cx - m / 2;
  const int y0 = cy - m / 2;
  for (const PlaneF& plane : channels.planes) {
    for (int dy = 0; dy < m; ++dy) {
      const int y = reflect_index(y0 + dy, plane.height);
      for (int dx = 0; dx < m; ++dx) {
        v.push_back(plane.at(reflect_index(x0 + dx, plane.width), y));
      }
    }
  }
  return v;
}

void save_channels(const std::string& path, const ImageChannels& channels) {
  BinaryWriter w(path);
  w.put_u32(uint32_t(channels.width));
  w.put_u32(uint32_t(channels.height));
  w.put_u32(uint32_t(channels.planes.size()));
  w.put_u32(kChannelsMagic);
  for (const PlaneF& p : channels.planes) {
    for (float v : p.data) w.put_f32(v);
  }
}

ImageChannels load_channels(const std::string& path) {
  BinaryReader r(path);
  ImageChannels c;
  c.width = int(r.get_u32());
  c.height = int(r.get_u32());
  const uint32_t planes = r.get_u32();
  if (r.get_u32() != kChannelsMagic) throw FormatError("bad channel dump magic: " + path);
  if (c.width <= 0 || c.height <= 0 || planes == 0 || planes > 1024) {
    throw FormatError("bad channel dump header: " + path);
  }
  c.planes.assign(planes, PlaneF(c.width, c.height));
  for (PlaneF& p : c.planes) {
    for (float& v : p.data) v = r.get_f32();
  }
  c.tags.assign(planes, "");
  return c;
}

}  // namespace semicontour
