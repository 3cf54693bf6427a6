// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/labeling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "cubemap/errors.hpp"

namespace cubemap {

namespace {

bool is_permutation_of_width(std::span<const std::uint8_t> perm, unsigned width) {
  if (perm.size() != width) {
    return false;
  }
  Label seen = 0;
  for (const auto p : perm) {
    if (p >= width || (seen >> p & 1) != 0) {
      return false;
    }
    seen |= Label{1} << p;
  }
  return true;
}

void check_layout(const LabelLayout &layout) {
  if (layout.dim_ga > kLabelCapacity || layout.dim_gp > layout.dim_ga) {
    throw IntegrityError("label layout: widths out of range");
  }
  if ((layout.proc_mask & layout.ext_mask) != 0 ||
      (layout.proc_mask | layout.ext_mask) != low_mask(layout.dim_ga) ||
      std::popcount(layout.proc_mask) != static_cast<int>(layout.dim_gp)) {
    throw IntegrityError("label layout: masks inconsistent");
  }
  if (!is_permutation_of_width(layout.perm, layout.dim_ga)) {
    throw IntegrityError("label layout: position permutation is not a bijection");
  }
}

} // namespace

LabelLayout LabelLayout::unpermuted(unsigned dim_gp, unsigned dim_ga) {
  LabelLayout layout;
  layout.dim_gp = dim_gp;
  layout.dim_ga = dim_ga;
  layout.ext_mask = low_mask(dim_ga - dim_gp);
  layout.proc_mask = low_mask(dim_ga) & ~layout.ext_mask;
  layout.perm.resize(dim_ga);
  std::iota(layout.perm.begin(), layout.perm.end(), std::uint8_t{0});
  return layout;
}

bool LabelLayout::is_identity() const {
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] != j) {
      return false;
    }
  }
  return true;
}

LabelState::LabelState(LabelLayout layout, std::vector<Label> labels)
    : layout_(std::move(layout)), labels_(std::move(labels)) {
  check_layout(layout_);
  const Label outside = ~low_mask(layout_.dim_ga);
  index_.reserve(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if ((labels_[v] & outside) != 0) {
      throw IntegrityError("label of vertex " + std::to_string(v) + " exceeds the layout width");
    }
    if (!index_.emplace(labels_[v], v).second) {
      throw IntegrityError("duplicate label at vertex " + std::to_string(v));
    }
  }
}

std::optional<VertexId> LabelState::vertex_of(Label label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<Label> LabelState::label_set() const {
  std::vector<Label> out(labels_);
  std::sort(out.begin(), out.end());
  return out;
}

void LabelState::swap_labels(VertexId u, VertexId v) {
  std::swap(labels_[u], labels_[v]);
  index_[labels_[u]] = u;
  index_[labels_[v]] = v;
}

unsigned dim_ga(unsigned dim_gp, std::span<const std::size_t> block_sizes) {
  std::size_t largest = 1;
  for (const auto s : block_sizes) {
    if (s == 0) {
      throw InvalidArgument("dim_ga: empty block");
    }
    largest = std::max(largest, s);
  }
  const auto ext = static_cast<unsigned>(std::bit_width(largest - 1));
  const unsigned total = dim_gp + ext;
  if (total > kLabelCapacity) {
    throw CapacityError("application labels need " + std::to_string(total) +
                        " bits, capacity is " + std::to_string(kLabelCapacity));
  }
  return total;
}

LabelState extend_labels(const Graph &ga, std::span<const VertexId> mapping,
                         const PcubeLabeling &pl, Rng &rng, ExtendOptions options) {
  if (mapping.size() != ga.num_vertices()) {
    throw InvalidArgument("mapping has " + std::to_string(mapping.size()) +
                          " entries, graph has " + std::to_string(ga.num_vertices()));
  }
  const VertexId num_pes = pl.num_vertices();
  std::vector<std::vector<VertexId>> members(num_pes);
  for (VertexId v = 0; v < mapping.size(); ++v) {
    if (mapping[v] >= num_pes) {
      throw InvalidArgument("vertex " + std::to_string(v) + " mapped to unknown PE " +
                            std::to_string(mapping[v]));
    }
    members[mapping[v]].push_back(v);
  }
  std::vector<std::size_t> sizes;
  for (VertexId pe = 0; pe < num_pes; ++pe) {
    if (!members[pe].empty()) {
      sizes.push_back(members[pe].size());
    } else if (!options.allow_empty_pes) {
      throw InvalidArgument("PE " + std::to_string(pe) + " receives no vertex");
    }
  }
  const unsigned width = dim_ga(pl.dim, sizes);
  auto layout = LabelLayout::unpermuted(pl.dim, width);
  const unsigned ext = layout.ext_width();

  std::vector<std::uint8_t> ext_perm(ext);
  std::iota(ext_perm.begin(), ext_perm.end(), std::uint8_t{0});
  rng.shuffle(std::span<std::uint8_t>(ext_perm));

  std::vector<Label> labels(mapping.size());
  for (VertexId pe = 0; pe < num_pes; ++pe) {
    auto &block = members[pe];
    rng.shuffle(std::span<VertexId>(block));
    const Label proc = ext >= 64 ? 0 : pl.labels[pe] << ext;
    for (std::size_t i = 0; i < block.size(); ++i) {
      labels[block[i]] = proc | permute_bits(static_cast<Label>(i), ext_perm);
    }
  }
  return LabelState(std::move(layout), std::move(labels));
}

Mapping decode_mapping(const LabelState &ls, const PcubeLabeling &pl) {
  if (!ls.layout().is_identity()) {
    throw IntegrityError("decode_mapping requires an unpermuted label state");
  }
  const unsigned ext = ls.layout().ext_width();
  Mapping mapping(ls.size());
  for (VertexId v = 0; v < ls.size(); ++v) {
    const Label proc = ext >= 64 ? 0 : (ls.label(v) & ls.layout().proc_mask) >> ext;
    const auto pe = pl.pe_of(proc);
    if (!pe) {
      throw IntegrityError("vertex " + std::to_string(v) + " carries processor part " +
                           to_hex(proc, pl.dim) + " that matches no PE");
    }
    mapping[v] = *pe;
  }
  return mapping;
}

LabelState permute_positions(const LabelState &ls, std::span<const std::uint8_t> perm) {
  const auto &old = ls.layout();
  if (!is_permutation_of_width(perm, old.dim_ga)) {
    throw InvalidArgument("permute_positions: not a permutation of the label positions");
  }
  LabelLayout layout = old;
  layout.proc_mask = permute_bits(old.proc_mask, perm);
  layout.ext_mask = permute_bits(old.ext_mask, perm);
  for (std::size_t j = 0; j < old.perm.size(); ++j) {
    layout.perm[j] = perm[old.perm[j]];
  }
  std::vector<Label> labels(ls.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = permute_bits(ls.labels()[v], perm);
  }
  return LabelState(std::move(layout), std::move(labels));
}

LabelState unpermute(const LabelState &ls) {
  const auto &perm = ls.layout().perm;
  std::vector<std::uint8_t> inverse(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    inverse[perm[j]] = static_cast<std::uint8_t>(j);
  }
  return permute_positions(ls, inverse);
}

std::string labels_to_csv(const LabelState &ls) {
  std::ostringstream out;
  out << "vertex,hex_label\n";
  for (VertexId v = 0; v < ls.size(); ++v) {
    out << v << ',' << to_hex(ls.label(v), ls.layout().dim_ga) << '\n';
  }
  return out.str();
}

} // namespace cubemap
