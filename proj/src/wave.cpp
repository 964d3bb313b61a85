#include "pure/wave.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace pure {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xff));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xff));
}

uint16_t get_u16(const uint8_t* p) { return static_cast<uint16_t>(p[0] | (p[1] << 8)); }

uint32_t get_u32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;

}  // namespace

Waveform read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open wav file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw IoError("not a RIFF/WAVE file: " + path);
    }

    uint16_t audio_format = 0, channels = 0, bits = 0;
    uint32_t sample_rate = 0;
    const uint8_t* data = nullptr;
    size_t data_len = 0;
    bool have_fmt = false;

    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
        const uint32_t chunk_len = get_u32(bytes.data() + pos + 4);
        pos += 8;
        if (pos + chunk_len > bytes.size()) throw IoError("truncated wav chunk in " + path);
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (chunk_len < 16) throw IoError("short fmt chunk in " + path);
            audio_format = get_u16(bytes.data() + pos);
            channels = get_u16(bytes.data() + pos + 2);
            sample_rate = get_u32(bytes.data() + pos + 4);
            bits = get_u16(bytes.data() + pos + 14);
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data = bytes.data() + pos;
            data_len = chunk_len;
        }
        pos += chunk_len + (chunk_len & 1);  // chunks are word-aligned
    }

    if (!have_fmt || data == nullptr) throw IoError("missing fmt or data chunk in " + path);
    if (channels != 1) throw IoError("only mono wav supported: " + path);

    Waveform wave;
    wave.sample_rate = static_cast<int>(sample_rate);
    if (audio_format == kFormatPcm && bits == 16) {
        const size_t n = data_len / 2;
        wave.samples.resize(n);
        for (size_t i = 0; i < n; ++i) {
            const int16_t s = static_cast<int16_t>(get_u16(data + 2 * i));
            wave.samples[i] = static_cast<double>(s) / 32768.0;
        }
    } else if (audio_format == kFormatFloat && bits == 32) {
        const size_t n = data_len / 4;
        wave.samples.resize(n);
        for (size_t i = 0; i < n; ++i) {
            const uint32_t u = get_u32(data + 4 * i);
            float f;
            std::memcpy(&f, &u, 4);
            wave.samples[i] = static_cast<double>(f);
        }
    } else {
        throw IoError("unsupported wav encoding (need pcm16 or float32): " + path);
    }
    return wave;
}

void write_wav(const std::string& path, const Waveform& wave, WavFormat format) {
    if (wave.sample_rate <= 0) throw ConfigError("write_wav: sample_rate must be positive");
    const uint32_t n = static_cast<uint32_t>(wave.samples.size());
    const uint16_t bytes_per_sample = format == WavFormat::pcm16 ? 2 : 4;
    const uint32_t data_len = n * bytes_per_sample;

    std::vector<uint8_t> out;
    out.reserve(64 + data_len);
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    const bool fact = format == WavFormat::float32;
    put_u32(out, 4 + 24 + (fact ? 12 : 0) + 8 + data_len);
    out.insert(out.end(), {'W', 'A', 'V', 'E'});

    out.insert(out.end(), {'f', 'm', 't', ' '});
    put_u32(out, 16);
    put_u16(out, format == WavFormat::pcm16 ? kFormatPcm : kFormatFloat);
    put_u16(out, 1);  // mono
    put_u32(out, static_cast<uint32_t>(wave.sample_rate));
    put_u32(out, static_cast<uint32_t>(wave.sample_rate) * bytes_per_sample);
    put_u16(out, bytes_per_sample);
    put_u16(out, static_cast<uint16_t>(bytes_per_sample * 8));

    if (fact) {
        out.insert(out.end(), {'f', 'a', 'c', 't'});
        put_u32(out, 4);
        put_u32(out, n);
    }

    out.insert(out.end(), {'d', 'a', 't', 'a'});
    put_u32(out, data_len);
    if (format == WavFormat::pcm16) {
        for (double s : wave.samples) {
            const double clamped = std::clamp(s, -1.0, 1.0);
            const double scaled = clamped * 32767.0;
            const int16_t q = static_cast<int16_t>(std::lrint(scaled));
            put_u16(out, static_cast<uint16_t>(q));
        }
    } else {
        for (double s : wave.samples) {
            const float f = static_cast<float>(s);
            uint32_t u;
            std::memcpy(&u, &f, 4);
            put_u32(out, u);
        }
    }

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write wav file: " + path);
    os.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!os) throw IoError("write failed: " + path);
}

double signal_energy(const std::vector<double>& samples) {
    double e = 0.0;
    for (double s : samples) e += s * s;
    return e;
}

}  // namespace pure
