#ifndef CUTLAB_DL_HPP
#define CUTLAB_DL_HPP

#include "cutlab/core.hpp"
#include "cutlab/groups.hpp"

namespace cutlab {

// Vertex of DL(k,n): a level i plus the nonzero edge labels along the two
// rays to the roots at infinity. `a` lives on levels < i (first tree),
// `b` on levels >= i (second tree); label values are 1..k-1 resp. 1..n-1,
// zero labels are not stored (the all-zero rays are the reference paths).
struct DLVertex {
  long long level = 0;
  std::vector<std::pair<long long, int>> a;  // sorted by position
  std::vector<std::pair<long long, int>> b;

  friend bool operator==(const DLVertex&, const DLVertex&) = default;
};

class DLGraphProvider : public GraphProvider {
 public:
  DLGraphProvider(int k, int n);
  std::vector<VertexKey> neighbors(const VertexKey& v) const override;
  int degree_bound() const override { return k_ + n_; }
  VertexKey origin() const override;
  std::string family() const override;
  int k() const { return k_; }
  int n() const { return n_; }

  static VertexKey serialize(const DLVertex& v);
  static DLVertex parse(const VertexKey& k);

 private:
  int k_;
  int n_;
};

// The DL(2,2) <-> lamplighter correspondence: level = position, lamps = the
// union of the two label supports. Exact inverse pair.
GroupElement lamplighter_from_dl(const DLVertex& v);
DLVertex dl_from_lamplighter(const GroupElement& g);
VertexKey lamplighter_key_from_dl_key(const VertexKey& k);
VertexKey dl_key_from_lamplighter_key(const VertexKey& k);

// The product of the two depth-k subtrees rooted at o (level 0) and at the
// reference vertex on level k of the second tree, together with its boundary
// edge set and the two leaf-side vertex classes carrying that boundary.
struct SubtreeBlock {
  int k = 0;
  std::vector<VertexId> vertices;      // the block itself
  std::vector<Edge> cut;               // its edge boundary
  std::vector<VertexId> first_leaf_side;   // level-k vertices (first tree leaves)
  std::vector<VertexId> second_leaf_side;  // level-0 vertices (second tree leaves)
};

// Requires the block and its 1-neighborhood clear of S_R (margin rule).
SubtreeBlock subtree_block(const GraphWindow& w, int k);

}  // namespace cutlab

#endif
