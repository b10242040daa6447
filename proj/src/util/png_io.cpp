// Copyright 2026 The groundiff Authors
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

#include "groundiff/util/png_io.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace groundiff::png {
namespace {

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

void append_chunk(std::string& out, const char type[4], const std::string& payload) {
  put_u32(out, static_cast<std::uint32_t>(payload.size()));
  std::size_t crc_start = out.size();
  out.append(type, 4);
  out.append(payload);
  std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(out.data() + crc_start), static_cast<uInt>(out.size() - crc_start)));
  put_u32(out, crc);
}

std::string zlib_deflate(const std::string& raw) {
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::string out(bound, '\0');
  if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound, reinterpret_cast<const Bytef*>(raw.data()),
                static_cast<uLong>(raw.size()), 6) != Z_OK)
    throw std::runtime_error("png: deflate failed");
  out.resize(bound);
  return out;
}

std::string zlib_inflate(const std::string& comp, std::size_t expected) {
  std::string out(expected, '\0');
  uLongf dst = static_cast<uLongf>(expected);
  if (uncompress(reinterpret_cast<Bytef*>(out.data()), &dst, reinterpret_cast<const Bytef*>(comp.data()),
                 static_cast<uLong>(comp.size())) != Z_OK ||
      dst != expected)
    throw std::runtime_error("png: inflate failed");
  return out;
}

void write_png(const std::string& path, int width, int height, int bit_depth, int color_type,
               const std::string& raw_scanlines) {
  std::string file("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(width));
  put_u32(ihdr, static_cast<std::uint32_t>(height));
  ihdr.push_back(static_cast<char>(bit_depth));
  ihdr.push_back(static_cast<char>(color_type));
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter method
  ihdr.push_back(0);  // no interlace
  append_chunk(file, "IHDR", ihdr);
  append_chunk(file, "IDAT", zlib_deflate(raw_scanlines));
  append_chunk(file, "IEND", "");

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("png: cannot open for write: " + path);
  f.write(file.data(), static_cast<std::streamsize>(file.size()));
  if (!f) throw std::runtime_error("png: write failed: " + path);
}

struct Decoded {
  int width = 0, height = 0, bit_depth = 0, color_type = 0;
  std::string raster;  // unfiltered, bytes_per_row * height
  std::size_t bytes_per_row = 0;
};

int channels_for(int color_type) {
  switch (color_type) {
    case 0: return 1;  // gray
    case 2: return 3;  // rgb
    case 4: return 2;  // gray+alpha
    case 6: return 4;  // rgba
    default: throw std::runtime_error("png: unsupported color type");
  }
}

std::uint8_t paeth(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
  int p = int(a) + int(b) - int(c);
  int pa = std::abs(p - int(a)), pb = std::abs(p - int(b)), pc = std::abs(p - int(c));
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

Decoded read_png(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("png: cannot open: " + path);
  std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (file.size() < 8 || std::memcmp(file.data(), "\x89PNG\r\n\x1a\n", 8) != 0)
    throw std::runtime_error("png: bad signature: " + path);

  Decoded d;
  std::string idat;
  std::size_t pos = 8;
  bool saw_ihdr = false;
  while (pos + 8 <= file.size()) {
    const auto* p = reinterpret_cast<const unsigned char*>(file.data() + pos);
    std::uint32_t len = get_u32(p);
    if (pos + 12 + len > file.size()) throw std::runtime_error("png: truncated chunk");
    std::string type(file.data() + pos + 4, 4);
    const char* payload = file.data() + pos + 8;
    if (type == "IHDR") {
      const auto* q = reinterpret_cast<const unsigned char*>(payload);
      d.width = static_cast<int>(get_u32(q));
      d.height = static_cast<int>(get_u32(q + 4));
      d.bit_depth = q[8];
      d.color_type = q[9];
      if (q[12] != 0) throw std::runtime_error("png: interlaced images unsupported");
      saw_ihdr = true;
    } else if (type == "IDAT") {
      idat.append(payload, len);
    } else if (type == "IEND") {
      break;
    }
    pos += 12 + len;
  }
  if (!saw_ihdr || d.width <= 0 || d.height <= 0) throw std::runtime_error("png: missing IHDR");
  if (d.bit_depth != 1 && d.bit_depth != 8) throw std::runtime_error("png: unsupported bit depth");

  int ch = channels_for(d.color_type);
  d.bytes_per_row = (static_cast<std::size_t>(d.width) * ch * d.bit_depth + 7) / 8;
  std::size_t expected = (d.bytes_per_row + 1) * d.height;
  std::string raw = zlib_inflate(idat, expected);

  d.raster.assign(d.bytes_per_row * d.height, '\0');
  std::size_t bpp = std::max<std::size_t>(1, static_cast<std::size_t>(ch) * d.bit_depth / 8);
  for (int y = 0; y < d.height; ++y) {
    int filter = static_cast<unsigned char>(raw[(d.bytes_per_row + 1) * y]);
    auto* cur = reinterpret_cast<std::uint8_t*>(d.raster.data() + d.bytes_per_row * y);
    const auto* src = reinterpret_cast<const std::uint8_t*>(raw.data() + (d.bytes_per_row + 1) * y + 1);
    const auto* up = y > 0 ? reinterpret_cast<const std::uint8_t*>(d.raster.data() + d.bytes_per_row * (y - 1)) : nullptr;
    for (std::size_t x = 0; x < d.bytes_per_row; ++x) {
      std::uint8_t left = x >= bpp ? cur[x - bpp] : 0;
      std::uint8_t above = up ? up[x] : 0;
      std::uint8_t ul = (up && x >= bpp) ? up[x - bpp] : 0;
      int v = src[x];
      switch (filter) {
        case 0: break;
        case 1: v += left; break;
        case 2: v += above; break;
        case 3: v += (int(left) + int(above)) / 2; break;
        case 4: v += paeth(left, above, ul); break;
        default: throw std::runtime_error("png: unknown filter");
      }
      cur[x] = static_cast<std::uint8_t>(v & 0xff);
    }
  }
  return d;
}

}  // namespace

void write_gray8(const std::string& path, const GrayImage& img) {
  std::string raw;
  raw.reserve(static_cast<std::size_t>(img.height) * (img.width + 1));
  for (int y = 0; y < img.height; ++y) {
    raw.push_back('\0');
    raw.append(reinterpret_cast<const char*>(&img.pixels[static_cast<std::size_t>(y) * img.width]),
               static_cast<std::size_t>(img.width));
  }
  write_png(path, img.width, img.height, 8, 0, raw);
}

void write_mask1(const std::string& path, const MaskGrid& mask) {
  int h = static_cast<int>(mask.rows()), w = static_cast<int>(mask.cols());
  std::size_t bpr = (static_cast<std::size_t>(w) + 7) / 8;
  std::string raw;
  raw.reserve((bpr + 1) * h);
  for (int y = 0; y < h; ++y) {
    raw.push_back('\0');
    std::string row(bpr, '\0');
    for (int x = 0; x < w; ++x)
      if (mask(y, x)) row[static_cast<std::size_t>(x) / 8] |= static_cast<char>(0x80u >> (x % 8));
    raw.append(row);
  }
  write_png(path, w, h, 1, 0, raw);
}

void write_rgb8(const std::string& path, const RgbImage& img) {
  std::string raw;
  raw.reserve(static_cast<std::size_t>(img.height) * (img.width * 3 + 1));
  for (int y = 0; y < img.height; ++y) {
    raw.push_back('\0');
    raw.append(reinterpret_cast<const char*>(&img.pixels[static_cast<std::size_t>(y) * img.width * 3]),
               static_cast<std::size_t>(img.width) * 3);
  }
  write_png(path, img.width, img.height, 8, 2, raw);
}

GrayImage read_gray8(const std::string& path) {
  Decoded d = read_png(path);
  GrayImage img(d.width, d.height);
  const auto* raster = reinterpret_cast<const std::uint8_t*>(d.raster.data());
  if (d.color_type == 0 && d.bit_depth == 8) {
    std::memcpy(img.pixels.data(), raster, img.pixels.size());
  } else if (d.color_type == 0 && d.bit_depth == 1) {
    for (int y = 0; y < d.height; ++y)
      for (int x = 0; x < d.width; ++x) {
        std::uint8_t byte = raster[d.bytes_per_row * y + x / 8];
        img.at(x, y) = (byte >> (7 - x % 8)) & 1 ? 255 : 0;
      }
  } else if ((d.color_type == 2 || d.color_type == 6) && d.bit_depth == 8) {
    int ch = channels_for(d.color_type);
    for (int y = 0; y < d.height; ++y)
      for (int x = 0; x < d.width; ++x) {
        const std::uint8_t* px = raster + d.bytes_per_row * y + static_cast<std::size_t>(x) * ch;
        // integer Rec.601 luma
        img.at(x, y) = static_cast<std::uint8_t>((299 * px[0] + 587 * px[1] + 114 * px[2]) / 1000);
      }
  } else {
    throw std::runtime_error("png: unsupported format for gray read: " + path);
  }
  return img;
}

MaskGrid read_mask1(const std::string& path) {
  GrayImage img = read_gray8(path);
  MaskGrid mask(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) mask(y, x) = img.at(x, y) >= 128 ? 1 : 0;
  return mask;
}

}  // namespace groundiff::png
