#include "pixcrypt/cipher.hpp"

namespace pixcrypt {

namespace {

void check_sizes(const Image& img, const Keystream& ks) {
  validate(img);
  const std::size_t n = static_cast<std::size_t>(img.pixel_count());
  if (ks.shuffles.size() != n || ks.flips[0].size() != n ||
      ks.flips[1].size() != n || ks.flips[2].size() != n)
    throw ArgumentError("cipher: keystream length does not match pixel count");
}

void check_config(const EncryptionConfig& cfg) {
  if (cfg.bit_depth != 8)
    throw ArgumentError("cipher: only bit depth 8 is supported");
}

Image apply_perm_rows(const Image& img, const Keystream& ks, bool inverse) {
  check_sizes(img, ks);
  Image out(img.width, img.height);
  const std::size_t n = static_cast<std::size_t>(img.pixel_count());
  for (std::size_t j = 0; j < n; ++j) {
    const int row = inverse ? kInverseColorPerm[ks.shuffles[j]] : ks.shuffles[j];
    const auto& perm = kColorPerms[row];
    for (int c = 0; c < 3; ++c) out.data[3 * j + c] = img.data[3 * j + perm[c]];
  }
  return out;
}

}  // namespace

Image negpos_transform(const Image& img, const Keystream& ks) {
  check_sizes(img, ks);
  Image out(img.width, img.height);
  const std::size_t n = static_cast<std::size_t>(img.pixel_count());
  for (std::size_t j = 0; j < n; ++j)
    for (int c = 0; c < 3; ++c) {
      const std::uint8_t p = img.data[3 * j + c];
      out.data[3 * j + c] = ks.flips[c][j] ? static_cast<std::uint8_t>(p ^ 0xFF) : p;
    }
  return out;
}

Image shuffle_colors(const Image& img, const Keystream& ks) {
  return apply_perm_rows(img, ks, /*inverse=*/false);
}

Image unshuffle_colors(const Image& img, const Keystream& ks) {
  return apply_perm_rows(img, ks, /*inverse=*/true);
}

Image encrypt(const Image& img, const Keystream& ks,
              const EncryptionConfig& cfg) {
  check_config(cfg);
  Image out = negpos_transform(img, ks);
  if (cfg.use_color_shuffle) out = shuffle_colors(out, ks);
  return out;
}

Image decrypt(const Image& img, const Keystream& ks,
              const EncryptionConfig& cfg) {
  check_config(cfg);
  // Strict reverse of the encryption order: the two steps do not commute
  // per pixel when the flip bits differ across channels.
  Image out = cfg.use_color_shuffle ? unshuffle_colors(img, ks) : img;
  return negpos_transform(out, ks);
}

}  // namespace pixcrypt
