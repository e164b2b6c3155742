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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicontour/features.hpp"
#include "semicontour/image.hpp"

namespace semicontour {

/// m x m binary contour mask attached to a labeled token.
struct StructuredLabel {
  int m = 0;
  std::vector<uint8_t> mask;  // row-major, entries 0/1

  StructuredLabel() = default;
  explicit StructuredLabel(int size) : m(size), mask(size_t(size) * size, 0) {}

  uint8_t& at(int x, int y) { return mask[size_t(y) * m + x]; }
  uint8_t at(int x, int y) const { return mask[size_t(y) * m + x]; }
  bool operator==(const StructuredLabel&) const = default;
};

/// One m x m image patch: SRF features, the 4-channel dictionary patch,
/// and (for l-tokens) the structured label.
struct Token {
  std::vector<float> features;    // m*m*13
  std::vector<float> dict_patch;  // m*m*4: r, g, b, contour
  std::optional<StructuredLabel> label;
  bool is_labeled = false;
  double confidence = 1.0;  // sampling confidence; 1 for l-tokens
  uint32_t source_image = 0;
  int cx = 0;
  int cy = 0;
};

struct TokenSet {
  int m = 0;
  std::vector<std::string> image_names;
  std::vector<Token> tokens;
};

enum class SampleMode { labeled, unlabeled };

struct SampleCounts {
  uint32_t n_fg = 0;
  uint32_t n_bg = 0;
};

struct SampleThresholds {
  double tau_hi = 0.7;
  double tau_lo = 0.2;
};

/// Samples tokens from one image.
///
/// Labeled mode: a center is foreground iff any ground-truth contour pixel
/// (union over annotators) lies in the central 2x2 block of its window;
/// requires gt_masks. Unlabeled mode: candidates come from the weak
/// detector's soft map (gamma_map): foreground where value >= tau_hi with
/// confidence = value, background where value <= tau_lo with confidence =
/// 1 - value. Sampling is with replacement when a class is scarce; requesting
/// a class with zero candidates throws. gamma_map, when present, also fills
/// the contour channel of dict_patch (zeros otherwise).
std::vector<Token> sample_tokens(const ImageF& image, const ImageChannels& channels,
                                 const std::vector<Mask>* gt_masks,
                                 const SoftContourMap* gamma_map, SampleCounts counts,
                                 SampleMode mode, SampleThresholds thresholds,
                                 uint64_t rng_seed);

/// True iff the center is a foreground center under the straddle rule.
bool straddles_contour(const std::vector<Mask>& gt_masks, int cx, int cy);

/// The discrete-label projection: encodes each mask by n_pairs random
/// pixel-pair disagreements (pairs shared across the call), projects the
/// encodings onto their top principal component, and thresholds at 0
/// (projection >= 0 -> class 1, else class 2). z must be 2.
std::vector<int> pi_map(std::span<const StructuredLabel> labels, int z, int n_pairs,
                        uint64_t rng_seed);
std::vector<int> pi_map(std::span<const StructuredLabel* const> labels, int z, int n_pairs,
                        uint64_t rng_seed);

/// Versioned binary cache for token sets; round-trips are bit-exact.
void save_token_set(const std::string& path, const TokenSet& set);
TokenSet load_token_set(const std::string& path);

}  // namespace semicontour
