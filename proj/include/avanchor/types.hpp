#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace avanchor {

struct AVCoords {
    double valence = 0.0;
    double arousal = 0.0;
};

// Per-utterance SSL feature tensor, row-major (layer, frame, dim).
struct LayerStack {
    std::string utterance_id;
    std::size_t layers = 0;
    std::size_t frames = 0;
    std::size_t dims = 0;
    std::vector<float> data;

    float at(std::size_t l, std::size_t t, std::size_t d) const {
        return data[(l * frames + t) * dims + d];
    }
    std::span<const float> frame(std::size_t l, std::size_t t) const {
        return {data.data() + (l * frames + t) * dims, dims};
    }
    // Shape sanity plus finiteness of every entry.
    void validate() const;
};

struct EmotionFeature {
    std::string utterance_id;
    std::vector<double> values;
};

struct AVPoint {
    std::string utterance_id;
    double valence = 0.0;
    double arousal = 0.0;
    std::string label;  // empty = unlabeled
};

// Dense n x dim matrix aligned row-for-row with a manifest. Stored as f32,
// matching the on-disk feature format.
struct FeatureMatrix {
    std::size_t count = 0;
    std::size_t dim = 0;
    std::vector<float> values;

    std::span<const float> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
    std::span<float> row(std::size_t i) { return {values.data() + i * dim, dim}; }
};

double euclidean_distance(std::span<const float> a, std::span<const float> b);

}  // namespace avanchor
