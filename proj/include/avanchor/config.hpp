#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace avanchor {

struct HeadConfig {
    std::size_t epochs = 50;
    std::size_t batch_size = 8;
    double adam_lr = 1e-4;
    std::size_t feature_dim = 100;
};

struct EmbedConfig {
    std::size_t k_neighbors = 20;
    double min_dist = 0.1;
    double spread = 1.0;
    double init_sigma = 0.01;
    double opt_lr = 1e-2;
    std::size_t epochs = 500;
    int negative_sample_rate = 5;
    double far_dist = 5.0;
    double unknown_dist = 1.0;
    bool move_both = false;
    std::uint64_t rng_seed = 42;
};

struct PipelineConfig {
    HeadConfig head;
    EmbedConfig embed;

    void validate() const;
    nlohmann::json to_json() const;
    static PipelineConfig from_json(const nlohmann::json& j);  // unknown keys rejected
    static PipelineConfig load(const std::string& path);
    void save(const std::string& path) const;
};

}  // namespace avanchor
