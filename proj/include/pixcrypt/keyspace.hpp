#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pixcrypt/cipher.hpp"
#include "pixcrypt/keygen.hpp"

namespace pixcrypt {

// Brute-force key-space sizes, reported in bits (log2). The raw counts are
// 2^(3n) for the negpos transform alone and 2^(3n) * 6^n with color
// shuffling; at realistic n they overflow fixed-width arithmetic, so bits
// are the canonical unit.
struct KeySpaceReport {
  long long n = 0;
  double log2_np = 0.0;
  double log2_col = 0.0;
  double log2_total = 0.0;
};

long long pixel_count(int width, int height);

KeySpaceReport keyspace_bits(long long n, const EncryptionConfig& cfg);

// Exact key-space count as a decimal string, for n <= 64.
std::string keyspace_exact(int n, const EncryptionConfig& cfg);

// Test oracle: every distinct keystream for an n-pixel image, each exactly
// once. Bounded to n <= 3 with shuffling and n <= 6 without.
std::vector<Keystream> enumerate_keystreams(int n, const EncryptionConfig& cfg);

}  // namespace pixcrypt
