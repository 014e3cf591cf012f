#include "invtheory/polyring/layout.hpp"

#include <algorithm>

#include "invtheory/errors.hpp"

namespace invtheory {

VariableLayout VariableLayout::copies_of(std::size_t base_dim, std::size_t copies, std::string name) {
  VariableLayout layout;
  layout.blocks_.push_back(CopyBlock{std::move(name), base_dim, copies, 0});
  layout.rebuild();
  return layout;
}

VariableLayout VariableLayout::with_block(std::string name, std::size_t base_dim, std::size_t copies) const {
  VariableLayout out = *this;
  auto taken = [&](const std::string& n) {
    return std::any_of(out.blocks_.begin(), out.blocks_.end(), [&](const CopyBlock& b) { return b.name == n; });
  };
  std::string unique = name;
  for (int suffix = 2; taken(unique); ++suffix) unique = name + std::to_string(suffix);
  out.blocks_.push_back(CopyBlock{unique, base_dim, copies, num_vars_});
  out.rebuild();
  return out;
}

VariableLayout VariableLayout::concat(const VariableLayout& other) const {
  VariableLayout out = *this;
  for (const auto& b : other.blocks_) out = out.with_block(b.name, b.base_dim, b.copies);
  return out;
}

VariableLayout VariableLayout::with_copies(std::size_t block, std::size_t copies) const {
  if (block >= blocks_.size()) fail(ErrorKind::invalid_argument, "block index out of range");
  VariableLayout out = *this;
  out.blocks_[block].copies = copies;
  std::size_t offset = 0;
  for (auto& b : out.blocks_) {
    b.offset = offset;
    offset += b.size();
  }
  out.rebuild();
  return out;
}

std::size_t VariableLayout::index(std::size_t block, std::size_t coord, std::size_t copy) const {
  const CopyBlock& b = blocks_.at(block);
  if (coord >= b.base_dim || copy >= b.copies) fail(ErrorKind::invalid_argument, "variable position out of range");
  return b.offset + copy * b.base_dim + coord;
}

VariableLayout::Position VariableLayout::position(std::size_t var) const {
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const CopyBlock& b = blocks_[bi];
    if (var >= b.offset && var < b.offset + b.size()) {
      std::size_t local = var - b.offset;
      return {bi, local % b.base_dim, local / b.base_dim};
    }
  }
  fail(ErrorKind::invalid_argument, "variable index out of range");
}

std::optional<std::size_t> VariableLayout::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void VariableLayout::rebuild() {
  labels_.clear();
  num_vars_ = 0;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const CopyBlock& b = blocks_[bi];
    const bool two_index = bi == 0 || b.copies > 1;
    for (std::size_t copy = 0; copy < b.copies; ++copy) {
      for (std::size_t coord = 0; coord < b.base_dim; ++coord) {
        std::string l = b.name + "[" + std::to_string(coord + 1);
        if (two_index) l += "," + std::to_string(copy);
        labels_.push_back(l + "]");
      }
    }
    num_vars_ += b.size();
  }
}

}  // namespace invtheory
