#include "pixcrypt/keygen.hpp"

#include <numeric>

namespace pixcrypt {

Keystream derive_keystream(MasterKey master, std::uint64_t image_index,
                           int width, int height) {
  if (width < 1 || height < 1)
    throw ArgumentError("derive_keystream: zero-area image");
  const std::size_t n = static_cast<std::size_t>(width) * height;
  Keystream ks;
  for (int c = 0; c < 3; ++c) {
    SplitMix64 rng(master.seed ^ splitmix64_next(image_index * 4 + c).value);
    ks.flips[c].resize(n);
    for (std::size_t j = 0; j < n; ++j)
      ks.flips[c][j] = static_cast<std::uint8_t>(rng.next() & 1);
  }
  SplitMix64 rng(master.seed ^ splitmix64_next(image_index * 4 + 3).value);
  ks.shuffles.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    ks.shuffles[j] = static_cast<std::uint8_t>(rng.next() % 6);
  return ks;
}

std::vector<std::uint64_t> keys_for_dataset(MasterKey /*master*/,
                                            KeyPolicy policy,
                                            std::size_t count) {
  if (count < 1) throw ArgumentError("keys_for_dataset: count must be >= 1");
  std::vector<std::uint64_t> indices(count, 0);
  if (policy == KeyPolicy::PerImageKeys)
    std::iota(indices.begin(), indices.end(), std::uint64_t{0});
  return indices;
}

}  // namespace pixcrypt
