#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pixcrypt/errors.hpp"

namespace pixcrypt {

// Root secret. The cipher's security argument concerns the expanded
// keystream space, not brute force on this seed, so 64 bits suffice.
struct MasterKey {
  std::uint64_t seed = 0;
};

struct Sm64Step {
  std::uint64_t value = 0;
  std::uint64_t state = 0;
};

// One step of the SplitMix64 mixing function. Fully specified so that every
// implementation reproduces identical keystreams bit for bit.
inline Sm64Step splitmix64_next(std::uint64_t state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {z ^ (z >> 31), state};
}

// Stream wrapper around splitmix64_next.
struct SplitMix64 {
  std::uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    const Sm64Step step = splitmix64_next(state);
    state = step.state;
    return step.value;
  }

  // Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class KeyPolicy {
  SameKey,       // one shared key for every image in the system
  PerImageKeys,  // an independent key per image
};

// Per-image expansion of a secret key: one flip bit per pixel per color
// channel, and one shuffle integer in [0,6) per pixel.
struct Keystream {
  std::array<std::vector<std::uint8_t>, 3> flips;  // values in {0,1}; R,G,B
  std::vector<std::uint8_t> shuffles;              // values in {0,...,5}

  std::size_t size() const { return shuffles.size(); }
  bool operator==(const Keystream&) const = default;
};

// Deterministically expands (master, image_index) into a Keystream for a
// width x height image. Four independent substreams are used, seeded as
//   seed_c = master.seed ^ splitmix64_next(image_index*4 + c).value
// with c in {0:R, 1:G, 2:B, 3:shuffle}. Flip bits are the low bit of each
// substream output (P(flip)=0.5); shuffle integers are output mod 6.
Keystream derive_keystream(MasterKey master, std::uint64_t image_index,
                           int width, int height);

// Effective image indices for a dataset of `count` images: under SameKey
// every image uses index 0 (one keystream shared by all); under
// PerImageKeys image i uses index i.
std::vector<std::uint64_t> keys_for_dataset(MasterKey master, KeyPolicy policy,
                                            std::size_t count);

}  // namespace pixcrypt
