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

#include "semicontour/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

namespace semicontour {

ImageF resize_image(const ImageF& src, int new_w, int new_h) {
  ImageF dst;
  dst.r = resize_bilinear(src.r, new_w, new_h);
  dst.g = resize_bilinear(src.g, new_w, new_h);
  dst.b = resize_bilinear(src.b, new_w, new_h);
  return dst;
}

SoftContourMap resize_map(const SoftContourMap& src, int new_w, int new_h) {
  Image2<double> tmp(src.width, src.height);
  tmp.data = src.values;
  Image2<double> out = resize_bilinear(tmp, new_w, new_h);
  SoftContourMap dst(new_w, new_h);
  dst.values = std::move(out.data);
  return dst;
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

// Decodes a PNG into 8- or 16-bit rows. want_gray16 keeps a single 16-bit
// gray channel; otherwise output is 8-bit RGB.
void read_png_rows(const std::string& path, bool want_gray16, int& w, int& h,
                   std::vector<std::vector<uint8_t>>& rows, int& bytes_per_pixel) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw IoError("cannot open PNG file: " + path);

  uint8_t sig[8];
  if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw FormatError("not a PNG file: " + path);
  }

  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png) throw IoError("png_create_read_struct failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw IoError("png_create_info_struct failed");
  if (setjmp(png_jmpbuf(r.png))) {
    throw FormatError("corrupt PNG file: " + path);
  }
  png_init_io(r.png, fp.get());
  png_set_sig_bytes(r.png, 8);
  png_read_info(r.png, r.info);

  png_set_palette_to_rgb(r.png);
  png_set_expand_gray_1_2_4_to_8(r.png);
  if (png_get_valid(r.png, r.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(r.png);
  png_set_strip_alpha(r.png);

  const png_byte color = png_get_color_type(r.png, r.info);
  if (want_gray16) {
    if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
        color == PNG_COLOR_TYPE_PALETTE) {
      png_set_rgb_to_gray_fixed(r.png, 1, -1, -1);
    }
    // keep bit depth; 8-bit inputs are scaled on the caller side
  } else {
    if (png_get_bit_depth(r.png, r.info) == 16) png_set_strip_16(r.png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) {
      png_set_gray_to_rgb(r.png);
    }
  }
  png_read_update_info(r.png, r.info);

  w = int(png_get_image_width(r.png, r.info));
  h = int(png_get_image_height(r.png, r.info));
  bytes_per_pixel = int(png_get_rowbytes(r.png, r.info)) / std::max(w, 1);
  if (w <= 0 || h <= 0) throw FormatError("empty PNG image: " + path);

  const size_t rowbytes = png_get_rowbytes(r.png, r.info);
  rows.assign(size_t(h), std::vector<uint8_t>(rowbytes));
  std::vector<png_bytep> ptrs(size_t(h));
  for (int y = 0; y < h; ++y) ptrs[y] = rows[y].data();
  png_read_image(r.png, ptrs.data());
  png_read_end(r.png, nullptr);
}

void write_png_rows(const std::string& path, int w, int h, int bit_depth, int color_type,
                    const std::vector<std::vector<uint8_t>>& rows) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw IoError("cannot create PNG file: " + path);

  PngWriter wr;
  wr.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!wr.png) throw IoError("png_create_write_struct failed");
  wr.info = png_create_info_struct(wr.png);
  if (!wr.info) throw IoError("png_create_info_struct failed");
  if (setjmp(png_jmpbuf(wr.png))) {
    throw IoError("failed writing PNG file: " + path);
  }
  png_init_io(wr.png, fp.get());
  png_set_IHDR(wr.png, wr.info, png_uint_32(w), png_uint_32(h), bit_depth, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(wr.png, wr.info);
  std::vector<png_bytep> ptrs(size_t(h));
  for (int y = 0; y < h; ++y) ptrs[y] = const_cast<uint8_t*>(rows[y].data());
  png_write_image(wr.png, ptrs.data());
  png_write_end(wr.png, nullptr);
}

}  // namespace

ImageF load_image_png(const std::string& path) {
  int w = 0, h = 0, bpp = 0;
  std::vector<std::vector<uint8_t>> rows;
  read_png_rows(path, /*want_gray16=*/false, w, h, rows, bpp);
  if (bpp != 3) throw FormatError("expected 8-bit RGB after expansion: " + path);
  ImageF img;
  img.r = PlaneF(w, h);
  img.g = PlaneF(w, h);
  img.b = PlaneF(w, h);
  for (int y = 0; y < h; ++y) {
    const uint8_t* p = rows[y].data();
    for (int x = 0; x < w; ++x) {
      img.r.at(x, y) = p[3 * x + 0] / 255.0f;
      img.g.at(x, y) = p[3 * x + 1] / 255.0f;
      img.b.at(x, y) = p[3 * x + 2] / 255.0f;
    }
  }
  return img;
}

void save_image_png(const std::string& path, const ImageF& img) {
  if (img.empty()) throw std::invalid_argument("save_image_png: empty image");
  const int w = img.width(), h = img.height();
  std::vector<std::vector<uint8_t>> rows(size_t(h), std::vector<uint8_t>(size_t(w) * 3));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      auto q = [](float v) {
        return uint8_t(std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f));
      };
      rows[y][3 * x + 0] = q(img.r.at(x, y));
      rows[y][3 * x + 1] = q(img.g.at(x, y));
      rows[y][3 * x + 2] = q(img.b.at(x, y));
    }
  }
  write_png_rows(path, w, h, 8, PNG_COLOR_TYPE_RGB, rows);
}

Mask load_mask_png(const std::string& path) {
  int w = 0, h = 0, bpp = 0;
  std::vector<std::vector<uint8_t>> rows;
  read_png_rows(path, /*want_gray16=*/true, w, h, rows, bpp);
  Mask m(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      uint32_t v = 0;
      if (bpp == 2) {
        v = (uint32_t(rows[y][2 * x]) << 8) | rows[y][2 * x + 1];
      } else {
        v = rows[y][size_t(x) * bpp];
      }
      m.at(x, y) = v != 0 ? 1 : 0;
    }
  }
  return m;
}

void save_mask_png(const std::string& path, const Mask& mask) {
  if (mask.empty()) throw std::invalid_argument("save_mask_png: empty mask");
  const int w = mask.width, h = mask.height;
  std::vector<std::vector<uint8_t>> rows(size_t(h), std::vector<uint8_t>(size_t(w)));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) rows[y][x] = mask.at(x, y) ? 255 : 0;
  }
  write_png_rows(path, w, h, 8, PNG_COLOR_TYPE_GRAY, rows);
}

SoftContourMap load_map_png(const std::string& path) {
  int w = 0, h = 0, bpp = 0;
  std::vector<std::vector<uint8_t>> rows;
  read_png_rows(path, /*want_gray16=*/true, w, h, rows, bpp);
  SoftContourMap map(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (bpp == 2) {
        const uint32_t v = (uint32_t(rows[y][2 * x]) << 8) | rows[y][2 * x + 1];
        map.at(x, y) = v / 65535.0;
      } else {
        map.at(x, y) = rows[y][size_t(x) * bpp] / 255.0;
      }
    }
  }
  return map;
}

void save_map_png(const std::string& path, const SoftContourMap& map) {
  if (map.empty()) throw std::invalid_argument("save_map_png: empty map");
  const int w = map.width, h = map.height;
  std::vector<std::vector<uint8_t>> rows(size_t(h), std::vector<uint8_t>(size_t(w) * 2));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double p = std::clamp(map.at(x, y), 0.0, 1.0);
      const uint16_t v = uint16_t(std::lround(p * 65535.0));
      rows[y][2 * x] = uint8_t(v >> 8);  // PNG samples are big-endian
      rows[y][2 * x + 1] = uint8_t(v & 0xff);
    }
  }
  write_png_rows(path, w, h, 16, PNG_COLOR_TYPE_GRAY, rows);
}

}  // namespace semicontour
