// Copyright 2026 The groundiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groundiff/metrics/ssim.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace groundiff::metrics {
namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
// Wang et al. five-scale exponents.
constexpr std::array<double, 5> kScaleWeights = {0.0448, 0.2856, 0.3001, 0.2363, 0.1333};

std::array<double, kWindow> gaussian_kernel() {
  std::array<double, kWindow> k{};
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    double x = i - (kWindow - 1) / 2.0;
    k[static_cast<std::size_t>(i)] = std::exp(-x * x / (2.0 * kSigma * kSigma));
    sum += k[static_cast<std::size_t>(i)];
  }
  for (auto& v : k) v /= sum;
  return k;
}

// Separable valid convolution with the shared Gaussian window.
MatD blur_valid(const MatD& img) {
  static const std::array<double, kWindow> kernel = gaussian_kernel();
  const Eigen::Index h = img.rows(), w = img.cols();
  MatD tmp(h, w - kWindow + 1);
  for (Eigen::Index y = 0; y < h; ++y)
    for (Eigen::Index x = 0; x + kWindow <= w; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) acc += kernel[static_cast<std::size_t>(k)] * img(y, x + k);
      tmp(y, x) = acc;
    }
  MatD out(h - kWindow + 1, tmp.cols());
  for (Eigen::Index y = 0; y + kWindow <= h; ++y)
    for (Eigen::Index x = 0; x < tmp.cols(); ++x) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) acc += kernel[static_cast<std::size_t>(k)] * tmp(y + k, x);
      out(y, x) = acc;
    }
  return out;
}

MatD downsample2(const MatD& img) {
  MatD out(img.rows() / 2, img.cols() / 2);
  for (Eigen::Index y = 0; y < out.rows(); ++y)
    for (Eigen::Index x = 0; x < out.cols(); ++x)
      out(y, x) = 0.25 * (img(2 * y, 2 * x) + img(2 * y, 2 * x + 1) + img(2 * y + 1, 2 * x) +
                          img(2 * y + 1, 2 * x + 1));
  return out;
}

struct ScaleStats {
  double mean_cs = 0.0;
  double mean_ssim = 0.0;
};

ScaleStats scale_stats(const MatD& a, const MatD& b, double c1, double c2) {
  MatD mu1 = blur_valid(a);
  MatD mu2 = blur_valid(b);
  MatD s11 = blur_valid(a.cwiseProduct(a)) - mu1.cwiseProduct(mu1);
  MatD s22 = blur_valid(b.cwiseProduct(b)) - mu2.cwiseProduct(mu2);
  MatD s12 = blur_valid(a.cwiseProduct(b)) - mu1.cwiseProduct(mu2);

  ScaleStats st;
  double cs_sum = 0.0, ssim_sum = 0.0;
  for (Eigen::Index y = 0; y < mu1.rows(); ++y)
    for (Eigen::Index x = 0; x < mu1.cols(); ++x) {
      double cs = (2.0 * s12(y, x) + c2) / (s11(y, x) + s22(y, x) + c2);
      double lum = (2.0 * mu1(y, x) * mu2(y, x) + c1) / (mu1(y, x) * mu1(y, x) + mu2(y, x) * mu2(y, x) + c1);
      cs_sum += cs;
      ssim_sum += lum * cs;
    }
  double n = static_cast<double>(mu1.rows() * mu1.cols());
  st.mean_cs = cs_sum / n;
  st.mean_ssim = ssim_sum / n;
  return st;
}

}  // namespace

double ms_ssim(const MatF& a, const MatF& b, int n_scales, double data_range) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("ms_ssim: image shapes differ");
  if (n_scales < 1 || n_scales > static_cast<int>(kScaleWeights.size()))
    throw std::invalid_argument("ms_ssim: n_scales out of range");
  const Eigen::Index min_side = std::min(a.rows(), a.cols());
  if (min_side < static_cast<Eigen::Index>(kWindow) << (n_scales - 1))
    throw std::invalid_argument("ms_ssim: image smaller than window * 2^(n_scales-1)");

  double weight_sum = 0.0;
  for (int i = 0; i < n_scales; ++i) weight_sum += kScaleWeights[static_cast<std::size_t>(i)];

  const double c1 = (0.01 * data_range) * (0.01 * data_range);
  const double c2 = (0.03 * data_range) * (0.03 * data_range);

  MatD x = a.cast<double>();
  MatD y = b.cast<double>();
  double result = 1.0;
  for (int s = 0; s < n_scales; ++s) {
    ScaleStats st = scale_stats(x, y, c1, c2);
    double w = kScaleWeights[static_cast<std::size_t>(s)] / weight_sum;
    double term = (s == n_scales - 1) ? st.mean_ssim : st.mean_cs;
    result *= std::pow(std::max(term, 0.0), w);
    if (s + 1 < n_scales) {
      x = downsample2(x);
      y = downsample2(y);
    }
  }
  return result;
}

double psnr(const MatF& a, const MatF& b, double peak) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("psnr: shapes differ");
  double mse = (a.cast<double>() - b.cast<double>()).squaredNorm() / static_cast<double>(a.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

}  // namespace groundiff::metrics
