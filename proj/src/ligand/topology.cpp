#include "nbga/ligand/topology.hpp"

#include <stdexcept>

namespace nbga::ligand {

SideTopology::SideTopology(std::vector<int> parents, std::vector<std::size_t> backbone)
    : parents_(std::move(parents)),
      backbone_(parents_.size(), false),
      children_(parents_.size()),
      descendants_(parents_.size()),
      depth_(parents_.size(), 0) {
  const std::size_t n = parents_.size();
  if (n == 0 || parents_[0] != -1) throw std::invalid_argument("position 0 must be the root");
  for (std::size_t i = 1; i < n; ++i) {
    const int p = parents_[i];
    if (p < 0 || static_cast<std::size_t>(p) >= i) {
      throw std::invalid_argument("parents must precede their children");
    }
    children_[static_cast<std::size_t>(p)].push_back(i);
    depth_[i] = depth_[static_cast<std::size_t>(p)] + 1;
  }
  for (std::size_t b : backbone) {
    if (b >= n) throw std::invalid_argument("backbone position out of range");
    backbone_[b] = true;
  }
  for (std::size_t i = n; i-- > 1;) {
    const auto p = static_cast<std::size_t>(parents_[i]);
    descendants_[p].push_back(i);
    descendants_[p].insert(descendants_[p].end(), descendants_[i].begin(), descendants_[i].end());
  }
  order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) order_[i] = i;
}

const TreeTopology& TreeTopology::standard() {
  static const TreeTopology topology{
      SideTopology({-1, 0, 0, 2, 2, 2, 5, 5, 5, 5}, {0, 2, 5}),
      SideTopology({-1, 0, 0, 2, 2, 2, 2}, {0, 2}),
  };
  return topology;
}

}  // namespace nbga::ligand
