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

#include <string>
#include <vector>

#include "semicontour/image.hpp"

namespace semicontour {

enum class GradientSource { raw_image, weak_detector };

/// Configuration of the per-pixel feature stack. Defaults give the 13-plane
/// layout: 3 Luv + per scale {1.0, 0.5} one gradient magnitude plane and 4
/// orientation planes.
struct FeatureConfig {
  int patch_size = 12;  // m, even and >= 4
  std::vector<double> scales{1.0, 0.5};
  int orientation_bins = 4;
  GradientSource gradient_source = GradientSource::weak_detector;

  int plane_count() const {
    return 3 + int(scales.size()) * (1 + orientation_bins);
  }
  int feature_dim() const { return patch_size * patch_size * plane_count(); }
  int dict_patch_dim() const { return patch_size * patch_size * 4; }

  /// Throws std::invalid_argument when any field violates its constraints.
  void validate() const;

  bool operator==(const FeatureConfig&) const = default;
};

/// The per-pixel feature stack computed from one image.
struct ImageChannels {
  int width = 0;
  int height = 0;
  std::vector<PlaneF> planes;
  std::vector<std::string> tags;  // one semantic tag per plane
};

/// Builds the feature stack. weak_map must be present iff
/// config.gradient_source == weak_detector and must match the image size;
/// with raw_image gradients come from the Luv luminance.
ImageChannels compute_channels(const ImageF& image, const FeatureConfig& config,
                               const SoftContourMap* weak_map = nullptr);

/// Value of feature k of the patch centred at (cx, cy): plane-major, then
/// row-major inside the m x m window whose top-left corner is
/// (cx - m/2, cy - m/2). Out-of-image pixels use reflected-border padding.
float feature_at(const ImageChannels& channels, int cx, int cy, uint32_t k, int m);

/// Concatenation of all plane windows for the patch at (cx, cy); length is
/// m * m * plane_count. Entry k equals feature_at(channels, cx, cy, k, m).
std::vector<float> extract_patch_vector(const ImageChannels& channels, int cx, int cy, int m);

/// CIELUV conversion used for the color planes (D65 white point, linear RGB
/// clamped to [0,1]). Exposed for the color planes' unit tests.
void rgb_to_luv(float r, float g, float b, float& l_out, float& u_out, float& v_out);

/// Debug dump of a channel stack: 16-byte header (u32 width, height, planes,
/// magic) followed by little-endian 32-bit floats, plane-major.
void save_channels(const std::string& path, const ImageChannels& channels);
ImageChannels load_channels(const std::string& path);

}  // namespace semicontour
