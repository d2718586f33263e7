// phasedet/audio.hpp
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phasedet {

constexpr int kPipelineSampleRate = 16000;

// Mono PCM signal. Labels: 0 = neurotypical, 1 = dysarthric, -1 = unlabeled.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;
  std::string speaker_id;
  int label = -1;

  std::size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }

  bool finite() const {
    for (double s : samples)
      if (!std::isfinite(s)) return false;
    return true;
  }
};

class AudioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Windowed-sinc polyphase resampler (Kaiser beta=8, 64 taps per phase,
// anti-alias cutoff at 0.45 * min(source, target) rate). Identity when the
// rates already match.
AudioClip resample(const AudioClip& clip, int target_rate);

}  // namespace phasedet
