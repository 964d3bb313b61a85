#pragma once

#include <span>
#include <string>
#include <vector>

#include "pure/common.hpp"
#include "pure/wave.hpp"

namespace pure {

enum class Window { hann, rect };

Window parse_window(const std::string& name);
const char* window_name(Window w);

// Fixed analysis/synthesis filterbank geometry. dim selects how many DCT
// coefficients are kept per frame; dim == frame_len is lossless.
struct FrontendConfig {
    int frame_len = 640;
    int hop = 320;
    int dim = 64;
    Window window = Window::hann;

    void validate() const;
};

// D x T frame embeddings, stored frame-major (frame t is contiguous).
struct EmbeddingSequence {
    int dim = 0;
    int frames = 0;
    int hop = 0;
    int sample_rate = 0;
    std::vector<double> data;

    static EmbeddingSequence zeros(int dim, int frames);

    double at(int d, int t) const { return data[static_cast<size_t>(t) * dim + d]; }
    double& at(int d, int t) { return data[static_cast<size_t>(t) * dim + d]; }
    std::span<const double> frame(int t) const {
        return {data.data() + static_cast<size_t>(t) * dim, static_cast<size_t>(dim)};
    }
    std::span<double> frame(int t) {
        return {data.data() + static_cast<size_t>(t) * dim, static_cast<size_t>(dim)};
    }
    bool same_shape(const EmbeddingSequence& other) const {
        return dim == other.dim && frames == other.frames;
    }
};

// floor((n_samples - frame_len) / hop) + 1; requires n_samples >= frame_len.
int frame_count(size_t n_samples, int frame_len, int hop);

std::vector<double> window_gains(int frame_len, Window w);

// Per frame: window, then keep the first dim coefficients of the orthonormal
// type-II DCT.
EmbeddingSequence analyze(const Waveform& wave, const FrontendConfig& cfg);

// Truncated inverse DCT per frame followed by weighted overlap-add. With
// dim == frame_len this inverts analyze exactly on the overlapped interior;
// with dim < frame_len each frame is the least-squares reconstruction from
// the kept coefficients.
Waveform synthesize(const EmbeddingSequence& emb, const FrontendConfig& cfg);

}  // namespace pure
