#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "avanchor/config.hpp"
#include "avanchor/rng.hpp"
#include "avanchor/types.hpp"

namespace avanchor {

// Classification head over layer stacks:
//   softmax(layer_logits)-weighted layer sum -> temporal mean
//   -> affine D->F (the emotion feature, no nonlinearity) -> affine F->C.
struct HeadParams {
    std::size_t layers = 0;       // L
    std::size_t in_dim = 0;       // D
    std::size_t feature_dim = 0;  // F
    std::size_t classes = 0;      // C

    std::vector<double> layer_logits;  // L
    std::vector<double> proj1_weight;  // D x F row-major
    std::vector<double> proj1_bias;    // F
    std::vector<double> proj2_weight;  // F x C row-major
    std::vector<double> proj2_bias;    // C

    // proj weights uniform(-s, s) with s = sqrt(6/(fan_in+fan_out));
    // layer_logits zero, i.e. uniform layer weights.
    static HeadParams init(std::size_t layers, std::size_t in_dim, std::size_t feature_dim,
                           std::size_t classes, Rng& rng);

    std::size_t parameter_count() const;
    bool same_shape(const HeadParams& other) const;
};

struct HeadActivations {
    std::vector<double> layer_weights;  // softmax(layer_logits), sums to 1
    std::vector<double> pooled;         // D, layer-weighted temporal mean
    std::vector<double> feature;        // F
    std::vector<double> logits;         // C, un-normalized
};

HeadActivations head_forward(const HeadParams& params, const LayerStack& stack);

// -log softmax(logits)[label], evaluated with the max-shift so large logits
// cannot overflow.
double cross_entropy_loss(std::span<const double> logits, std::size_t label_index);

struct HeadGradients {
    std::vector<double> layer_logits;
    std::vector<double> proj1_weight;
    std::vector<double> proj1_bias;
    std::vector<double> proj2_weight;
    std::vector<double> proj2_bias;

    static HeadGradients zeros_like(const HeadParams& params);
    void accumulate(const HeadGradients& other);
    void scale(double factor);
};

// Analytic gradients of cross_entropy_loss(head_forward(...)) w.r.t. every
// parameter group. Returns the sample loss alongside.
std::pair<HeadGradients, double> head_backward(const HeadParams& params, const LayerStack& stack,
                                               std::size_t label_index);

struct TrainReport {
    std::vector<double> epoch_loss;  // mean cross-entropy per epoch
    double final_accuracy = 0.0;
    std::uint64_t rng_seed = 0;
};

struct TrainData {
    std::vector<const LayerStack*> stacks;
    std::vector<std::size_t> label_indices;
    std::size_t num_classes = 0;
};

// Adam (beta1 0.9, beta2 0.999, eps 1e-8) over shuffled mini-batches; the
// final short batch is used as-is. Deterministic given the seed.
std::pair<HeadParams, TrainReport> train_head(const TrainData& data, const HeadConfig& config,
                                              std::uint64_t seed);

std::vector<EmotionFeature> extract_features(const HeadParams& params,
                                             const std::vector<const LayerStack*>& stacks);

// AVHD checkpoint: magic "AVHD", u32 JSON header length, JSON header (shapes,
// config, seed, class names), then all parameters as f64 in declaration
// order.
struct HeadCheckpoint {
    HeadParams params;
    HeadConfig config;
    std::uint64_t seed = 0;
    std::vector<std::string> class_names;
};

void save_head_checkpoint(const HeadCheckpoint& ckpt, const std::string& path);
HeadCheckpoint load_head_checkpoint(const std::string& path);

}  // namespace avanchor
