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

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "semicontour/common.hpp"

namespace semicontour {

/// Little-endian binary artifact writer. All multi-byte fields in model and
/// cache files go through this, so files are byte-identical across runs.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw IoError("cannot create file: " + path);
  }

  void put_bytes(const void* p, size_t n) {
    out_.write(static_cast<const char*>(p), std::streamsize(n));
    if (!out_) throw IoError("write failed: " + path_);
  }
  void put_u8(uint8_t v) { put_bytes(&v, 1); }
  void put_u32(uint32_t v) {
    uint8_t b[4] = {uint8_t(v), uint8_t(v >> 8), uint8_t(v >> 16), uint8_t(v >> 24)};
    put_bytes(b, 4);
  }
  void put_u64(uint64_t v) {
    uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = uint8_t(v >> (8 * i));
    put_bytes(b, 8);
  }
  void put_f32(float v) {
    uint32_t u;
    std::memcpy(&u, &v, 4);
    put_u32(u);
  }
  void put_f64(double v) {
    uint64_t u;
    std::memcpy(&u, &v, 8);
    put_u64(u);
  }
  void put_string(const std::string& s) {
    put_u32(uint32_t(s.size()));
    put_bytes(s.data(), s.size());
  }
  void put_magic(const char (&m)[9]) { put_bytes(m, 8); }

 private:
  std::string path_;
  std::ofstream out_;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path)
      : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw IoError("cannot open file: " + path);
  }

  void get_bytes(void* p, size_t n) {
    in_.read(static_cast<char*>(p), std::streamsize(n));
    if (size_t(in_.gcount()) != n) throw FormatError("unexpected end of file: " + path_);
  }
  uint8_t get_u8() {
    uint8_t v;
    get_bytes(&v, 1);
    return v;
  }
  uint32_t get_u32() {
    uint8_t b[4];
    get_bytes(b, 4);
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 | uint32_t(b[3]) << 24;
  }
  uint64_t get_u64() {
    uint8_t b[8];
    get_bytes(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
    return v;
  }
  float get_f32() {
    const uint32_t u = get_u32();
    float v;
    std::memcpy(&v, &u, 4);
    return v;
  }
  double get_f64() {
    const uint64_t u = get_u64();
    double v;
    std::memcpy(&v, &u, 8);
    return v;
  }
  std::string get_string(uint32_t max_len = 1u << 20) {
    const uint32_t n = get_u32();
    if (n > max_len) throw FormatError("string too long in: " + path_);
    std::string s(n, '\0');
    get_bytes(s.data(), n);
    return s;
  }
  void expect_magic(const char (&m)[9], const std::string& what) {
    char got[8];
    get_bytes(got, 8);
    if (std::memcmp(got, m, 8) != 0) {
      throw FormatError("bad magic for " + what + " in: " + path_);
    }
  }

 private:
  std::string path_;
  std::ifstream in_;
};

}  // namespace semicontour
