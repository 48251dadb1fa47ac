#include "pixcrypt/metrics.hpp"

#include <cmath>
#include <limits>

namespace pixcrypt {

std::vector<double> gaussian_window(const SsimParams& p) {
  if (p.window < 1 || p.window % 2 == 0)
    throw ArgumentError("ssim: window must be odd and positive");
  const int r = p.window / 2;
  std::vector<double> w(static_cast<std::size_t>(p.window) * p.window);
  double sum = 0.0;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx) {
      const double g = std::exp(-(dx * dx + dy * dy) / (2.0 * p.sigma * p.sigma));
      w[(dy + r) * p.window + (dx + r)] = g;
      sum += g;
    }
  for (auto& v : w) v /= sum;
  return w;
}

double ssim(const Image& a, const Image& b, const SsimParams& p) {
  validate(a);
  validate(b);
  if (a.width != b.width || a.height != b.height)
    throw ArgumentError("ssim: image dimensions differ");
  if (a.width < p.window || a.height < p.window)
    throw ArgumentError("ssim: image smaller than the window");

  const auto win = gaussian_window(p);
  const double c1 = p.c1();
  const double c2 = p.c2();
  const int r = p.window / 2;
  const int n = a.pixel_count();

  double channel_sum = 0.0;
  std::vector<double> pa(n), pb(n);
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < n; ++i) {
      pa[i] = static_cast<double>(a.data[3 * static_cast<std::size_t>(i) + c]);
      pb[i] = static_cast<double>(b.data[3 * static_cast<std::size_t>(i) + c]);
    }
    double score_sum = 0.0;
    long positions = 0;
    for (int cy = r; cy < a.height - r; ++cy) {
      for (int cx = r; cx < a.width - r; ++cx) {
        double ma = 0.0, mb = 0.0, maa = 0.0, mbb = 0.0, mab = 0.0;
        int wi = 0;
        for (int dy = -r; dy <= r; ++dy) {
          const int row = (cy + dy) * a.width + cx;
          for (int dx = -r; dx <= r; ++dx, ++wi) {
            const double w = win[wi];
            const double va = pa[row + dx];
            const double vb = pb[row + dx];
            ma += w * va;
            mb += w * vb;
            maa += w * va * va;
            mbb += w * vb * vb;
            mab += w * va * vb;
          }
        }
        const double var_a = maa - ma * ma;
        const double var_b = mbb - mb * mb;
        const double cov = mab - ma * mb;
        const double score = ((2.0 * ma * mb + c1) * (2.0 * cov + c2)) /
                             ((ma * ma + mb * mb + c1) * (var_a + var_b + c2));
        score_sum += score;
        ++positions;
      }
    }
    channel_sum += score_sum / static_cast<double>(positions);
  }
  return channel_sum / 3.0;
}

double mse_image(const Image& a, const Image& b) {
  validate(a);
  validate(b);
  if (a.width != b.width || a.height != b.height)
    throw ArgumentError("mse: image dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double d = static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.data.size());
}

double psnr(const Image& a, const Image& b) {
  const double mse = mse_image(a, b);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace pixcrypt
