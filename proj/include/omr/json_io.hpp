#pragma once

#include <string>

#include "omr/algebra.hpp"
#include "omr/loday.hpp"

namespace omr {

/// File formats (JSON syntax, rationals as "p/q" or "p" strings,
/// multi-indices as 1-based digit arrays):
///   algebra:  { "name", "dim", "constants": [[[c,...],...],...] }
///             with constants[i-1][j-1][k-1] the coordinate of e_i e_j on e_k
///   map:      { "src_dim", "src_deg", "dst_dim", "dst_deg",
///               "entries": [[dstIndex, srcIndex, c], ...] }
///   morphism: { "N", "levels": [map, ...] } with levels[n] of degree n
/// Serialization is deterministic (sorted keys, fixed entry order), so equal
/// values produce identical bytes.

AlgebraSpec algebra_from_json_text(const std::string& text);
std::string algebra_to_json_text(const AlgebraSpec& a);
AlgebraSpec read_algebra_file(const std::string& path);
void write_algebra_file(const AlgebraSpec& a, const std::string& path);

TensorMap tensor_map_from_json_text(const std::string& text);
std::string tensor_map_to_json_text(const TensorMap& m);

TruncatedMorphism morphism_from_json_text(const std::string& text);
std::string morphism_to_json_text(const TruncatedMorphism& s);
TruncatedMorphism read_morphism_file(const std::string& path);
void write_morphism_file(const TruncatedMorphism& s, const std::string& path);

}  // namespace omr
