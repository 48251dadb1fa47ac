#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pixcrypt/errors.hpp"

namespace pixcrypt {

// 8-bit RGB raster. Samples are stored row-major, interleaved R,G,B per
// pixel; this is the one canonical layout used everywhere in the library.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h);  // zero-filled

  int pixel_count() const { return width * height; }

  std::size_t index(int x, int y, int c) const {
    return 3 * (static_cast<std::size_t>(y) * width + x) + c;
  }
  std::uint8_t at(int x, int y, int c) const { return data[index(x, y, c)]; }
  std::uint8_t& at(int x, int y, int c) { return data[index(x, y, c)]; }

  bool operator==(const Image&) const = default;
};

// Throws ArgumentError if the Image invariants do not hold
// (positive dimensions, data length == 3*width*height).
void validate(const Image& img);

// Binary P6 portable pixmap, maxval 255 only.
Image read_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_ppm(const Image& img);

// STL-10 binary container: 27648 bytes per record, channel-planar
// (all R, then G, then B), column-major within each plane. Records are
// converted to the canonical row-major interleaved layout on ingest.
inline constexpr int kStl10Side = 96;
inline constexpr std::size_t kStl10RecordBytes = 3 * 96 * 96;
std::vector<Image> read_stl10(std::span<const std::uint8_t> bytes);

// Centered size x size sub-image; offsets are floor((dim - size) / 2).
Image center_crop(const Image& img, int size);

// File helpers. All throw IoError on filesystem failure.
Image load_ppm(const std::string& path);
void save_ppm(const Image& img, const std::string& path);
std::vector<Image> load_stl10(const std::string& path, int max_images = -1);
// Loads every *.ppm in `dir`, sorted by filename.
std::vector<Image> load_ppm_dir(const std::string& dir, int max_images = -1);

}  // namespace pixcrypt
