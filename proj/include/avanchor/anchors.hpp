#pragma once

#include <map>
#include <optional>
#include <string>

#include "avanchor/types.hpp"

namespace avanchor {

// Category -> reference (valence, arousal) pair. Keys are stored lower-case;
// lookups fold case. "neutral" -> (0, 0) is mandatory.
class AnchorTable {
public:
    void insert(const std::string& name, AVCoords coords);
    std::optional<AVCoords> lookup(const std::string& name) const;
    bool contains(const std::string& name) const { return lookup(name).has_value(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, AVCoords>& entries() const { return entries_; }

    // Rejects tables without a neutral->(0,0) entry or values outside [-1, 1].
    void validate() const;

    // Canonical JSON form: sorted keys, two-space indent, trailing newline.
    std::string serialize() const;

private:
    std::map<std::string, AVCoords> entries_;
};

AnchorTable load_anchor_table(const std::string& path);
void save_anchor_table(const AnchorTable& table, const std::string& path);

// The built-in eleven-entry table: ten reference emotions plus neutral at the
// origin.
AnchorTable default_anchor_table();

std::string to_lower(std::string s);

}  // namespace avanchor
