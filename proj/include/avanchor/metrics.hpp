#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "avanchor/anchors.hpp"
#include "avanchor/types.hpp"

namespace avanchor {

struct CCCResult {
    double ccc = 0.0;
    double pearson = 0.0;
    double mean_x = 0.0, mean_y = 0.0;
    double std_x = 0.0, std_y = 0.0;  // population std devs
    bool degenerate = false;          // both inputs constant and equal
};

// Concordance correlation: 2*cov(x,y) / (var_x + var_y + (mean_x - mean_y)^2)
// with population (divisor n) moments. Degenerate denominator yields 0.
CCCResult ccc(std::span<const double> x, std::span<const double> y);

double mae(std::span<const double> x, std::span<const double> y);

struct ClusterAnchorMae {
    double valence = 0.0;
    double arousal = 0.0;
};

// Per-label centroids vs anchors. label_weighted averages with equal weight
// per present label; otherwise each label is weighted by its point count.
ClusterAnchorMae cluster_anchor_mae(const std::vector<AVPoint>& points, const AnchorTable& anchors,
                                    bool label_weighted = true);

struct EvalReport {
    CCCResult valence_ccc, arousal_ccc;
    double valence_mae = 0.0, arousal_mae = 0.0;
    std::size_t count = 0;
    nlohmann::json to_json() const;
};

// Joins on utterance_id (pred ids must all exist in ref) and evaluates both
// dimensions.
EvalReport evaluate(const std::vector<AVPoint>& pred, const std::vector<AVPoint>& ref);

}  // namespace avanchor
