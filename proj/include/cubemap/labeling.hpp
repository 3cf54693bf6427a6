// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubemap/bits.hpp"
#include "cubemap/graph.hpp"
#include "cubemap/pcube.hpp"
#include "cubemap/rng.hpp"

namespace cubemap {

using Mapping = std::vector<VertexId>;

/// Which label positions currently carry processor digits and which carry
/// extension digits.
struct DigitMasks {
  Label proc = 0;
  Label ext = 0;

  /// Masks seen by labels that lost their `levels` lowest digits.
  [[nodiscard]] DigitMasks shifted(unsigned levels) const {
    return {levels >= 64 ? 0 : proc >> levels, levels >= 64 ? 0 : ext >> levels};
  }
};

/// Position layout of application labels. Unpermuted, the extension part
/// occupies bits [0, dim_ga - dim_gp) and the processor part the bits above,
/// i.e. the label read as a binary number is l_p followed by l_e.
struct LabelLayout {
  unsigned dim_gp = 0;
  unsigned dim_ga = 0;
  Label proc_mask = 0;
  Label ext_mask = 0;
  /// perm[j] = current position of unpermuted position j.
  std::vector<std::uint8_t> perm;

  static LabelLayout unpermuted(unsigned dim_gp, unsigned dim_ga);

  [[nodiscard]] unsigned ext_width() const { return dim_ga - dim_gp; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] DigitMasks masks() const { return {proc_mask, ext_mask}; }

  friend bool operator==(const LabelLayout &, const LabelLayout &) = default;
};

/// Unique labels of the application vertices plus the reverse index.
class LabelState {
public:
  LabelState() = default;
  /// Throws IntegrityError on duplicate labels or bits outside the layout.
  LabelState(LabelLayout layout, std::vector<Label> labels);

  [[nodiscard]] const LabelLayout &layout() const { return layout_; }
  [[nodiscard]] std::span<const Label> labels() const { return labels_; }
  [[nodiscard]] Label label(VertexId v) const { return labels_[v]; }
  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] std::optional<VertexId> vertex_of(Label label) const;
  /// The label set in ascending order.
  [[nodiscard]] std::vector<Label> label_set() const;

  /// Exchanges the labels of u and v, keeping the index consistent.
  void swap_labels(VertexId u, VertexId v);

  friend bool operator==(const LabelState &a, const LabelState &b) {
    return a.layout_ == b.layout_ && a.labels_ == b.labels_;
  }

private:
  LabelLayout layout_;
  std::vector<Label> labels_;
  std::unordered_map<Label, VertexId> index_;
};

/// dim_gp plus enough extension digits to tell apart the vertices of the
/// largest block. Throws CapacityError above 64.
unsigned dim_ga(unsigned dim_gp, std::span<const std::size_t> block_sizes);

struct ExtendOptions {
  /// Permit PEs that receive no vertex.
  bool allow_empty_pes = false;
};

/// Builds unique application labels from a mapping: the processor part is
/// the PE's label, the extension part a within-block index drawn in random
/// order, written in binary and passed through one random permutation of the
/// extension positions shared by all vertices.
LabelState extend_labels(const Graph &ga, std::span<const VertexId> mapping,
                         const PcubeLabeling &pl, Rng &rng, ExtendOptions options = {});

/// Inverse of extend_labels on the processor part. Requires an unpermuted
/// layout; throws IntegrityError when a processor part matches no PE.
Mapping decode_mapping(const LabelState &ls, const PcubeLabeling &pl);

/// Applies `perm` (perm[j] = new position of current position j) to every
/// label and to the layout.
LabelState permute_positions(const LabelState &ls, std::span<const std::uint8_t> perm);
LabelState unpermute(const LabelState &ls);

/// Debug dump, CSV "vertex,hex_label".
std::string labels_to_csv(const LabelState &ls);

} // namespace cubemap
