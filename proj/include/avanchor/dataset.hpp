#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "avanchor/types.hpp"

namespace avanchor {

enum class Split { train, test };

std::string split_name(Split s);
Split parse_split(const std::string& s);

struct ManifestRow {
    std::string utterance_id;
    std::string label;  // empty = unlabeled (e.g. no-majority-vote rows)
    std::string speaker;
    Split split = Split::train;
    std::string feature_path;  // path to an AVLS file, may be empty

    bool has_label() const { return !label.empty(); }
};

// Rows plus an id-keyed stack store. Immutable after loading; duplicate ids
// are rejected on insert.
class Dataset {
public:
    std::size_t add_row(ManifestRow row);
    const std::vector<ManifestRow>& rows() const { return rows_; }
    const ManifestRow& row(std::size_t i) const { return rows_[i]; }
    std::size_t size() const { return rows_.size(); }
    std::optional<std::size_t> index_of(const std::string& utterance_id) const;

    std::vector<std::size_t> split_indices(Split s) const;
    // Train rows that carry a label; unlabeled rows never train.
    std::vector<std::size_t> labeled_train_indices() const;

    void put_stack(LayerStack stack);
    const LayerStack* stack_for(const std::string& utterance_id) const;

    // Reads every row's feature_path (resolved against base_dir) into the
    // stack store and checks the shared-L/shared-D invariant.
    void load_stacks(const std::string& base_dir);

private:
    std::vector<ManifestRow> rows_;
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_map<std::string, LayerStack> stacks_;
};

// Manifest CSV: header `utterance_id,label,speaker,split,feature_path`.
Dataset load_manifest(const std::string& path);
void save_manifest(const Dataset& dataset, const std::string& path);

std::string parent_dir(const std::string& path);

}  // namespace avanchor
