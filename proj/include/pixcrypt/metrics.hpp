#pragma once

#include <vector>

#include "pixcrypt/image.hpp"

namespace pixcrypt {

// Reference SSIM configuration: 11x11 Gaussian window (sigma 1.5,
// normalized to sum 1), k1 = 0.01, k2 = 0.03, dynamic range 255. With these
// values C1 = 6.5025 and C2 = 58.5225.
struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
};

// The normalized window weights, row-major, size window*window.
std::vector<double> gaussian_window(const SsimParams& p);

// Mean SSIM over all fully-interior window positions (valid padding),
// computed per channel and averaged over the three channels. Result is in
// [-1, 1]; both images must share dimensions and be at least window x window.
double ssim(const Image& a, const Image& b, const SsimParams& p = {});

// Mean squared difference over raw 8-bit sample values.
double mse_image(const Image& a, const Image& b);

// 10*log10(255^2 / mse), +infinity when mse == 0.
double psnr(const Image& a, const Image& b);

}  // namespace pixcrypt
