#include "pure/frontend.hpp"

#include <cmath>

namespace pure {

Window parse_window(const std::string& name) {
    if (name == "hann") return Window::hann;
    if (name == "rect") return Window::rect;
    throw ConfigError("unknown window: " + name);
}

const char* window_name(Window w) {
    return w == Window::hann ? "hann" : "rect";
}

void FrontendConfig::validate() const {
    if (frame_len <= 0) throw ConfigError("frontend: frame_len must be positive");
    if (hop <= 0 || hop > frame_len) throw ConfigError("frontend: need 0 < hop <= frame_len");
    if (dim <= 0 || dim > frame_len) throw ConfigError("frontend: need 0 < dim <= frame_len");
}

EmbeddingSequence EmbeddingSequence::zeros(int dim, int frames) {
    EmbeddingSequence emb;
    emb.dim = dim;
    emb.frames = frames;
    emb.data.assign(static_cast<size_t>(dim) * frames, 0.0);
    return emb;
}

int frame_count(size_t n_samples, int frame_len, int hop) {
    if (n_samples < static_cast<size_t>(frame_len)) {
        throw DimensionError("frame_count: signal shorter than one frame");
    }
    return static_cast<int>((n_samples - frame_len) / hop) + 1;
}

std::vector<double> window_gains(int frame_len, Window w) {
    std::vector<double> gains(frame_len, 1.0);
    if (w == Window::hann) {
        for (int n = 0; n < frame_len; ++n) {
            gains[n] = 0.5 - 0.5 * std::cos(2.0 * kPi * n / frame_len);
        }
    }
    return gains;
}

namespace {

// Orthonormal type-II DCT basis, rows 0..dim-1. basis[k * frame_len + n].
std::vector<double> dct_basis(int frame_len, int dim) {
    std::vector<double> basis(static_cast<size_t>(dim) * frame_len);
    const double n_inv = 1.0 / frame_len;
    for (int k = 0; k < dim; ++k) {
        const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) * n_inv);
        for (int n = 0; n < frame_len; ++n) {
            basis[static_cast<size_t>(k) * frame_len + n] =
                scale * std::cos(kPi * (2.0 * n + 1.0) * k / (2.0 * frame_len));
        }
    }
    return basis;
}

}  // namespace

EmbeddingSequence analyze(const Waveform& wave, const FrontendConfig& cfg) {
    cfg.validate();
    if (wave.samples.size() < static_cast<size_t>(cfg.frame_len)) {
        throw DimensionError("analyze: signal shorter than one frame");
    }
    const int N = cfg.frame_len;
    const int D = cfg.dim;
    const int T = frame_count(wave.samples.size(), N, cfg.hop);
    const std::vector<double> win = window_gains(N, cfg.window);
    const std::vector<double> basis = dct_basis(N, D);

    EmbeddingSequence emb = EmbeddingSequence::zeros(D, T);
    emb.hop = cfg.hop;
    emb.sample_rate = wave.sample_rate;

    std::vector<double> frame(N);
    for (int t = 0; t < T; ++t) {
        const size_t start = static_cast<size_t>(t) * cfg.hop;
        for (int n = 0; n < N; ++n) frame[n] = win[n] * wave.samples[start + n];
        for (int k = 0; k < D; ++k) {
            const double* row = basis.data() + static_cast<size_t>(k) * N;
            double acc = 0.0;
            for (int n = 0; n < N; ++n) acc += row[n] * frame[n];
            emb.at(k, t) = acc;
        }
    }
    return emb;
}

Waveform synthesize(const EmbeddingSequence& emb, const FrontendConfig& cfg) {
    cfg.validate();
    if (emb.dim != cfg.dim) {
        throw DimensionError("synthesize: embedding dim does not match config dim");
    }
    const int N = cfg.frame_len;
    const int D = cfg.dim;
    const int T = emb.frames;
    const std::vector<double> win = window_gains(N, cfg.window);
    const std::vector<double> basis = dct_basis(N, D);

    Waveform wave;
    wave.sample_rate = emb.sample_rate > 0 ? emb.sample_rate : 16000;
    const size_t out_len = T > 0 ? static_cast<size_t>(T - 1) * cfg.hop + N : 0;
    std::vector<double> num(out_len, 0.0);
    std::vector<double> den(out_len, 0.0);

    std::vector<double> frame(N);
    for (int t = 0; t < T; ++t) {
        // truncated inverse: frame = basis^T * coeffs, still carries the
        // analysis window
        for (int n = 0; n < N; ++n) frame[n] = 0.0;
        for (int k = 0; k < D; ++k) {
            const double* row = basis.data() + static_cast<size_t>(k) * N;
            const double c = emb.at(k, t);
            for (int n = 0; n < N; ++n) frame[n] += c * row[n];
        }
        const size_t start = static_cast<size_t>(t) * cfg.hop;
        for (int n = 0; n < N; ++n) {
            num[start + n] += win[n] * frame[n];
            den[start + n] += win[n] * win[n];
        }
    }

    wave.samples.resize(out_len);
    for (size_t i = 0; i < out_len; ++i) {
        wave.samples[i] = den[i] > 1e-12 ? num[i] / den[i] : 0.0;
    }
    return wave;
}

}  // namespace pure
