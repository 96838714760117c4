#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avanchor/types.hpp"

namespace avanchor {

// Binary container formats. All integers and floats are little-endian.
//
//   AVLS  magic "AVLS", u32 L, u32 T, u32 D, then L*T*D f32, row-major
//         (layer, frame, dim).
//   AVFM  magic "AVFM", u32 n, u32 F, then n*F f32. Row i belongs to row i
//         of the companion manifest.

void save_layer_stack(const LayerStack& stack, const std::string& path);
LayerStack load_layer_stack(const std::string& path, const std::string& utterance_id = "");

void save_feature_matrix(const FeatureMatrix& fm, const std::string& path);
FeatureMatrix load_feature_matrix(const std::string& path);

// Plain-CSV alternative for features: header `utterance_id,f0..f{F-1}`.
// Returned ids are the first column; rows keep file order.
FeatureMatrix load_feature_csv(const std::string& path, std::vector<std::string>& ids);

// AV CSV: header `utterance_id,valence,arousal,label`, label empty when
// absent. Numbers are written with shortest round-trip formatting.
void save_av_csv(const std::vector<AVPoint>& points, const std::string& path);
std::vector<AVPoint> load_av_csv(const std::string& path);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

// Low-level helpers shared by the format writers.
void append_u32(std::string& out, std::uint32_t v);
void append_f32(std::string& out, float v);
void append_f64(std::string& out, double v);

class ByteReader {
public:
    explicit ByteReader(std::string bytes, std::string source);
    std::uint32_t read_u32();
    float read_f32();
    double read_f64();
    std::string read_bytes(std::size_t n);
    void expect_magic(const char magic[4]);
    bool at_end() const { return pos_ == bytes_.size(); }
    void require_end() const;

private:
    std::string bytes_;
    std::string source_;
    std::size_t pos_ = 0;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace avanchor
