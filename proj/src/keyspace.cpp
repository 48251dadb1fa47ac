#include "pixcrypt/keyspace.hpp"

#include <cmath>

namespace pixcrypt {

long long pixel_count(int width, int height) {
  if (width < 1 || height < 1)
    throw ArgumentError("pixel_count: dimensions must be >= 1");
  return static_cast<long long>(width) * height;
}

KeySpaceReport keyspace_bits(long long n, const EncryptionConfig& cfg) {
  if (n < 1) throw ArgumentError("keyspace_bits: n must be >= 1");
  KeySpaceReport rep;
  rep.n = n;
  rep.log2_np = 3.0 * static_cast<double>(n);
  rep.log2_col =
      cfg.use_color_shuffle ? static_cast<double>(n) * std::log2(6.0) : 0.0;
  rep.log2_total = rep.log2_np + rep.log2_col;
  return rep;
}

std::string keyspace_exact(int n, const EncryptionConfig& cfg) {
  if (n < 1) throw ArgumentError("keyspace_exact: n must be >= 1");
  if (n > 64) throw CapacityError("keyspace_exact: bounded to n <= 64");
  // Schoolbook big integer in base 1e9: multiply 1 by 8 (and 6, when
  // shuffling) n times.
  std::vector<std::uint32_t> limbs = {1};
  auto mul_small = [&limbs](std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      const std::uint64_t v = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(v % 1000000000u);
      carry = v / 1000000000u;
    }
    while (carry) {
      limbs.push_back(static_cast<std::uint32_t>(carry % 1000000000u));
      carry /= 1000000000u;
    }
  };
  for (int i = 0; i < n; ++i) {
    mul_small(8);
    if (cfg.use_color_shuffle) mul_small(6);
  }
  std::string out = std::to_string(limbs.back());
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::vector<Keystream> enumerate_keystreams(int n, const EncryptionConfig& cfg) {
  if (n < 1) throw ArgumentError("enumerate_keystreams: n must be >= 1");
  const int bound = cfg.use_color_shuffle ? 3 : 6;
  if (n > bound)
    throw CapacityError("enumerate_keystreams: bounded to n <= " +
                        std::to_string(bound) +
                        (cfg.use_color_shuffle ? " with" : " without") +
                        " color shuffling");
  const std::uint64_t flip_count = std::uint64_t{1} << (3 * n);
  std::uint64_t shuffle_count = 1;
  if (cfg.use_color_shuffle)
    for (int i = 0; i < n; ++i) shuffle_count *= 6;

  std::vector<Keystream> out;
  out.reserve(flip_count * shuffle_count);
  for (std::uint64_t f = 0; f < flip_count; ++f) {
    Keystream base;
    for (int c = 0; c < 3; ++c) {
      base.flips[c].resize(n);
      for (int j = 0; j < n; ++j)
        base.flips[c][j] = static_cast<std::uint8_t>((f >> (3 * j + c)) & 1);
    }
    base.shuffles.assign(n, 0);
    if (!cfg.use_color_shuffle) {
      out.push_back(std::move(base));
      continue;
    }
    for (std::uint64_t s = 0; s < shuffle_count; ++s) {
      Keystream ks = base;
      std::uint64_t rest = s;
      for (int j = 0; j < n; ++j) {
        ks.shuffles[j] = static_cast<std::uint8_t>(rest % 6);
        rest /= 6;
      }
      out.push_back(std::move(ks));
    }
  }
  return out;
}

}  // namespace pixcrypt
