// phasedet/wav.hpp
//
// Minimal RIFF/WAVE reader and writer. PCM 16-bit integer and IEEE 32-bit
// float, little-endian. Multichannel input is averaged down to mono.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "phasedet/audio.hpp"

namespace phasedet {

class WavError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WavEncoding { pcm16, float32 };

AudioClip load_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const AudioClip& clip,
               WavEncoding encoding = WavEncoding::float32);

}  // namespace phasedet
