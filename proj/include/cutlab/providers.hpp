#ifndef CUTLAB_PROVIDERS_HPP
#define CUTLAB_PROVIDERS_HPP

#include "cutlab/core.hpp"

namespace cutlab {

// Hexagonal (honeycomb) lattice in brick-wall coordinates: vertices are
// integer pairs, horizontal edges always present, vertical edge between
// (x,y) and (x,y+1) iff x+y is even. 3-regular, vertex-transitive, girth 6.
class HexLatticeProvider : public GraphProvider {
 public:
  std::vector<VertexKey> neighbors(const VertexKey& v) const override;
  int degree_bound() const override { return 3; }
  VertexKey origin() const override { return "0,0"; }
  std::string family() const override { return "hex"; }
};

// Infinite d-regular tree. Keys are root-to-vertex child-label paths
// ("" for the root, labels dot-separated); the root has d children, every
// other vertex d-1.
class RegularTreeProvider : public GraphProvider {
 public:
  explicit RegularTreeProvider(int degree);
  std::vector<VertexKey> neighbors(const VertexKey& v) const override;
  int degree_bound() const override { return degree_; }
  VertexKey origin() const override { return ""; }
  std::string family() const override;
  int boundary_connected_radius() const override { return 1; }

 private:
  int degree_;
};

}  // namespace cutlab

#endif
