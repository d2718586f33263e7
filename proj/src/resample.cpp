#include "phasedet/audio.hpp"

#include <numeric>

namespace phasedet {

namespace {

constexpr int kTapsPerPhase = 64;
constexpr double kKaiserBeta = 8.0;

double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(M_PI * x) / (M_PI * x);
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0)
    throw AudioError("non-positive target rate: " + std::to_string(target_rate));
  if (clip.sample_rate <= 0)
    throw AudioError("non-positive source rate: " + std::to_string(clip.sample_rate));
  if (target_rate == clip.sample_rate || clip.samples.empty()) {
    AudioClip out = clip;
    out.sample_rate = target_rate;
    return out;
  }

  const int g = std::gcd(clip.sample_rate, target_rate);
  const std::int64_t up = target_rate / g;    // interpolation factor L
  const std::int64_t down = clip.sample_rate / g;  // decimation factor M

  // Prototype lowpass designed at the upsampled rate src*L.
  const double fs_up = static_cast<double>(clip.sample_rate) * static_cast<double>(up);
  const double cutoff_hz = 0.45 * std::min(clip.sample_rate, target_rate);
  const double fc = cutoff_hz / fs_up;  // cycles per upsampled sample

  const std::int64_t len = up * kTapsPerPhase;
  const double center = static_cast<double>(len - 1) / 2.0;
  const double inv_i0 = 1.0 / bessel_i0(kKaiserBeta);
  std::vector<double> h(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) {
    const double t = (static_cast<double>(i) - center) / center;  // [-1, 1]
    const double w = bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - t * t))) * inv_i0;
    h[static_cast<std::size_t>(i)] =
        2.0 * fc * sinc(2.0 * fc * (static_cast<double>(i) - center)) * w *
        static_cast<double>(up);
  }

  const std::int64_t n_in = static_cast<std::int64_t>(clip.samples.size());
  const std::int64_t n_out = n_in * up / down;
  const std::int64_t ic = static_cast<std::int64_t>(center);

  AudioClip out;
  out.sample_rate = target_rate;
  out.speaker_id = clip.speaker_id;
  out.label = clip.label;
  out.samples.resize(static_cast<std::size_t>(n_out));

  const double* x = clip.samples.data();
  double* y = out.samples.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < n_out; ++m) {
    const std::int64_t q = m * down + ic;  // tap-aligned position in upsampled grid
    const std::int64_t i0 = q % up;
    const std::int64_t x0 = (q - i0) / up;
    double acc = 0.0;
    for (std::int64_t j = 0; j < kTapsPerPhase; ++j) {
      const std::int64_t xi = x0 - j;
      if (xi < 0) break;
      if (xi >= n_in) continue;
      acc += h[static_cast<std::size_t>(i0 + j * up)] * x[xi];
    }
    y[m] = acc;
  }
  return out;
}

}  // namespace phasedet
