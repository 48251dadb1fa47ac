#include "pixcrypt/image.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace pixcrypt {

Image::Image(int w, int h) : width(w), height(h) {
  if (w < 1 || h < 1) throw ArgumentError("image: dimensions must be >= 1");
  data.assign(3 * static_cast<std::size_t>(w) * h, 0);
}

void validate(const Image& img) {
  if (img.width < 1 || img.height < 1)
    throw ArgumentError("image: dimensions must be >= 1");
  if (img.data.size() != 3 * static_cast<std::size_t>(img.width) * img.height)
    throw ArgumentError("image: data length != 3*width*height");
}

namespace {

// Skips PPM whitespace and '#' comment lines, then parses one decimal token.
int parse_ppm_int(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  auto is_space = [](std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  };
  while (pos < bytes.size()) {
    if (is_space(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
    throw FormatError("ppm: malformed header");
  long value = 0;
  while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
    value = value * 10 + (bytes[pos] - '0');
    if (value > 1 << 20) throw FormatError("ppm: header value out of range");
    ++pos;
  }
  return static_cast<int>(value);
}

}  // namespace

Image read_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    throw FormatError("ppm: bad magic, expected P6");
  std::size_t pos = 2;
  const int width = parse_ppm_int(bytes, pos);
  const int height = parse_ppm_int(bytes, pos);
  const int maxval = parse_ppm_int(bytes, pos);
  if (width < 1 || height < 1) throw FormatError("ppm: bad dimensions");
  if (maxval != 255)
    throw FormatError("ppm: unsupported maxval " + std::to_string(maxval) +
                      ", only 255 is supported");
  // Exactly one whitespace byte separates the header from the payload.
  if (pos >= bytes.size()) throw FormatError("ppm: truncated header");
  ++pos;
  Image img(width, height);
  if (bytes.size() - pos < img.data.size())
    throw FormatError("ppm: truncated pixel payload");
  std::memcpy(img.data.data(), bytes.data() + pos, img.data.size());
  return img;
}

std::vector<std::uint8_t> write_ppm(const Image& img) {
  validate(img);
  std::string header = "P6\n" + std::to_string(img.width) + " " +
                       std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.data.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.data.begin(), img.data.end());
  return out;
}

std::vector<Image> read_stl10(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % kStl10RecordBytes != 0)
    throw FormatError("stl10: byte length is not a multiple of 27648");
  const std::size_t count = bytes.size() / kStl10RecordBytes;
  std::vector<Image> images;
  images.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint8_t* rec = bytes.data() + r * kStl10RecordBytes;
    Image img(kStl10Side, kStl10Side);
    // Planar offset: channel plane, then column-major within the plane.
    for (int c = 0; c < 3; ++c)
      for (int x = 0; x < kStl10Side; ++x)
        for (int y = 0; y < kStl10Side; ++y)
          img.at(x, y, c) = rec[c * kStl10Side * kStl10Side + x * kStl10Side + y];
    images.push_back(std::move(img));
  }
  return images;
}

Image center_crop(const Image& img, int size) {
  validate(img);
  if (size < 1 || size > std::min(img.width, img.height))
    throw ArgumentError("center_crop: size must be in [1, min(width, height)]");
  const int ox = (img.width - size) / 2;
  const int oy = (img.height - size) / 2;
  Image out(size, size);
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = img.at(ox + x, oy + y, c);
  return out;
}

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path);
  return bytes;
}

}  // namespace

Image load_ppm(const std::string& path) { return read_ppm(read_file(path)); }

void save_ppm(const Image& img, const std::string& path) {
  const auto bytes = write_ppm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

std::vector<Image> load_stl10(const std::string& path, int max_images) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes;
  if (max_images < 0) {
    bytes.assign((std::istreambuf_iterator<char>(in)),
                 std::istreambuf_iterator<char>());
  } else {
    bytes.resize(kStl10RecordBytes * static_cast<std::size_t>(max_images));
    in.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    bytes.resize(static_cast<std::size_t>(in.gcount()));
  }
  return read_stl10(bytes);
}

std::vector<Image> load_ppm_dir(const std::string& dir, int max_images) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".ppm")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  if (max_images >= 0 && paths.size() > static_cast<std::size_t>(max_images))
    paths.resize(max_images);
  std::vector<Image> images;
  images.reserve(paths.size());
  for (const auto& p : paths) images.push_back(load_ppm(p));
  return images;
}

}  // namespace pixcrypt
