#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nbga::ligand {

enum class Side { Right, Left };

/// Adjacency of one side's tree. Positions are 0-based; position 0 hangs off
/// the pharmacophore anchor.
class SideTopology {
 public:
  /// `parents[i]` is the parent of position i (-1 for the root, which must be
  /// position 0); `backbone` lists the internal chain positions.
  SideTopology(std::vector<int> parents, std::vector<std::size_t> backbone);

  std::size_t size() const noexcept { return parents_.size(); }
  int parent(std::size_t position) const noexcept { return parents_[position]; }
  std::span<const std::size_t> children(std::size_t position) const noexcept {
    return children_[position];
  }
  std::span<const std::size_t> descendants(std::size_t position) const noexcept {
    return descendants_[position];
  }
  bool is_backbone(std::size_t position) const noexcept { return backbone_[position]; }
  bool is_internal(std::size_t position) const noexcept { return !children_[position].empty(); }
  std::size_t depth(std::size_t position) const noexcept { return depth_[position]; }

  /// Parents always precede their children.
  std::span<const std::size_t> root_to_leaf() const noexcept { return order_; }

 private:
  std::vector<int> parents_;
  std::vector<bool> backbone_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> descendants_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> order_;
};

/// Both sides of the two-tree ligand.
struct TreeTopology {
  SideTopology right;
  SideTopology left;

  const SideTopology& side(Side s) const noexcept { return s == Side::Right ? right : left; }

  /// Right: backbone 1-3-6 with children(1) = {2,3}, children(3) = {4,5,6},
  /// children(6) = {7,8,9,10}. Left: backbone 1-3 with children(1) = {2,3},
  /// children(3) = {4,5,6,7}. (1-based, as the positions are usually quoted.)
  static const TreeTopology& standard();
};

}  // namespace nbga::ligand
