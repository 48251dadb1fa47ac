#pragma once

#include <array>

#include "pixcrypt/image.hpp"
#include "pixcrypt/keygen.hpp"

namespace pixcrypt {

struct EncryptionConfig {
  int bit_depth = 8;              // L; the cipher is defined for L = 8 only
  bool use_color_shuffle = false; // Step 3 is optional
};

// The six permutations of the color components, indexed by the per-pixel
// shuffle integer. Row k lists, for each output channel (R,G,B), the source
// channel it is taken from: out[i] = in[kColorPerms[k][i]].
//   0:(R,G,B) 1:(R,B,G) 2:(G,R,B) 3:(G,B,R) 4:(B,R,G) 5:(B,G,R)
inline constexpr std::array<std::array<int, 3>, 6> kColorPerms = {{
    {0, 1, 2},
    {0, 2, 1},
    {1, 0, 2},
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},
}};

// Row index of the inverse permutation of row k. Rows 0,1,2,5 are
// involutions; rows 3 and 4 invert each other.
inline constexpr std::array<int, 6> kInverseColorPerm = {0, 1, 2, 4, 3, 5};

// Negative-positive transformation: per pixel j and channel c the sample is
// kept when the flip bit is 0 and complemented (p XOR 255) when it is 1.
// Self-inverse for a fixed keystream.
Image negpos_transform(const Image& img, const Keystream& ks);

// Per-pixel permutation of the R,G,B samples selected by the shuffle integer.
Image shuffle_colors(const Image& img, const Keystream& ks);

// Exact inverse of shuffle_colors for the same keystream.
Image unshuffle_colors(const Image& img, const Keystream& ks);

// Full encryption: negpos transform, then color shuffling when enabled.
Image encrypt(const Image& img, const Keystream& ks,
              const EncryptionConfig& cfg);

// Exact inverse of encrypt: unshuffle when enabled, then negpos transform.
Image decrypt(const Image& img, const Keystream& ks,
              const EncryptionConfig& cfg);

}  // namespace pixcrypt
