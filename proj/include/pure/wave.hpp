#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pure/common.hpp"

namespace pure {

// Mono waveform, nominal amplitude range [-1, 1].
struct Waveform {
    std::vector<double> samples;
    int sample_rate = 16000;
};

enum class WavFormat { pcm16, float32 };

// Reads a mono RIFF/WAVE file. Accepts 16-bit integer PCM and 32-bit IEEE
// float; anything else (including multi-channel audio) is an error.
Waveform read_wav(const std::string& path);

void write_wav(const std::string& path, const Waveform& wave,
               WavFormat format = WavFormat::float32);

double signal_energy(const std::vector<double>& samples);

}  // namespace pure
