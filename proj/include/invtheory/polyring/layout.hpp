#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invtheory {

/// A run of variables made of `copies` copies of a `base_dim`-dimensional
/// space. Variable (coord, copy) of the block sits at
/// offset + copy * base_dim + coord.
struct CopyBlock {
  std::string name;
  std::size_t base_dim = 0;
  std::size_t copies = 1;
  std::size_t offset = 0;

  std::size_t size() const noexcept { return base_dim * copies; }
  bool operator==(const CopyBlock&) const = default;
};

/// Block-structured variable set. Block 0 is the primary copies block V^n
/// with variables x[i,j] (coordinate i = 1..dim V, copy j = 0..n-1); further
/// blocks hold extra variables (a complement U, the adjoined x_g, ...).
///
/// Coordinates print 1-based and copies 0-based, so x[1,0] is the first
/// coordinate of copy 0.
class VariableLayout {
 public:
  VariableLayout() = default;

  static VariableLayout copies_of(std::size_t base_dim, std::size_t copies, std::string name = "x");
  static VariableLayout single(std::size_t num_vars, std::string name = "x") { return copies_of(num_vars, 1, name); }

  /// Appends a block; the name is made unique if it collides.
  VariableLayout with_block(std::string name, std::size_t base_dim, std::size_t copies) const;
  VariableLayout with_extra(std::size_t count, std::string name = "u") const { return with_block(std::move(name), count, 1); }
  /// Concatenation of two layouts (blocks of `other` renamed on collision).
  VariableLayout concat(const VariableLayout& other) const;
  /// Same blocks with block `block` resized to `copies` copies.
  VariableLayout with_copies(std::size_t block, std::size_t copies) const;

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<CopyBlock>& blocks() const noexcept { return blocks_; }
  const CopyBlock& block(std::size_t b) const { return blocks_.at(b); }

  /// Primary block shape; zero for an empty layout.
  std::size_t base_dim() const noexcept { return blocks_.empty() ? 0 : blocks_[0].base_dim; }
  std::size_t copies() const noexcept { return blocks_.empty() ? 0 : blocks_[0].copies; }
  std::size_t extra_vars() const noexcept { return blocks_.empty() ? 0 : num_vars_ - blocks_[0].size(); }

  std::size_t index(std::size_t block, std::size_t coord, std::size_t copy) const;
  /// Position of a variable: (block, coord, copy).
  struct Position {
    std::size_t block;
    std::size_t coord;
    std::size_t copy;
  };
  Position position(std::size_t var) const;

  const std::string& label(std::size_t var) const { return labels_.at(var); }
  std::optional<std::size_t> find_label(std::string_view label) const;

  bool operator==(const VariableLayout& other) const { return blocks_ == other.blocks_; }

 private:
  void rebuild();

  std::vector<CopyBlock> blocks_;
  std::vector<std::string> labels_;
  std::size_t num_vars_ = 0;
};

using LayoutPtr = std::shared_ptr<const VariableLayout>;

inline LayoutPtr make_layout(VariableLayout layout) { return std::make_shared<const VariableLayout>(std::move(layout)); }

}  // namespace invtheory
