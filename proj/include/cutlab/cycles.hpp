#ifndef CUTLAB_CYCLES_HPP
#define CUTLAB_CYCLES_HPP

#include <optional>

#include "cutlab/core.hpp"
#include "cutlab/cutsets.hpp"
#include "cutlab/groups.hpp"

namespace cutlab {

// Indicator vector over the window's edge index; addition is symmetric
// difference.
class BinaryEdgeVector {
 public:
  BinaryEdgeVector() = default;
  explicit BinaryEdgeVector(int edge_count)
      : bits_((edge_count + 63) / 64, 0), n_(edge_count) {}

  int size() const { return n_; }
  bool test(int eid) const {
    return (bits_[eid >> 6] >> (eid & 63)) & 1ull;
  }
  void set(int eid) { bits_[eid >> 6] |= 1ull << (eid & 63); }
  void toggle(int eid) { bits_[eid >> 6] ^= 1ull << (eid & 63); }
  void xor_with(const BinaryEdgeVector& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
  }
  bool any() const {
    for (auto w : bits_)
      if (w) return true;
    return false;
  }
  bool intersects(const BinaryEdgeVector& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }
  int popcount() const;
  int lowest_set() const;  // -1 when empty
  std::vector<int> set_bits() const;
  std::size_t hash() const;

  friend bool operator==(const BinaryEdgeVector&,
                         const BinaryEdgeVector&) = default;

 private:
  std::vector<std::uint64_t> bits_;
  int n_ = 0;
};

BinaryEdgeVector edge_vector_of(const GraphWindow& w,
                                const std::vector<Edge>& edges);
std::vector<Edge> edges_of_vector(const GraphWindow& w,
                                  const BinaryEdgeVector& v);
// Vertices incident to an odd number of set edges.
std::vector<VertexId> odd_vertices(const GraphWindow& w,
                                   const BinaryEdgeVector& v);

struct CycleBasisSet {
  std::vector<BinaryEdgeVector> cycles;
  int max_length = 0;  // every member has at most this many edges
};

// All window-contained translates of the relator loops, deduplicated as edge
// sets. Relators are words over the Cayley window's generator indices and
// must evaluate to the identity.
CycleBasisSet relator_cycles(const GraphWindow& w,
                             const std::vector<std::vector<int>>& relators);

// Subset of basis indices whose mod-2 sum equals target, chosen by Gaussian
// elimination in canonical edge order; nullopt when the target is outside
// the span (possibly a window artifact). Requires odd_vertices(target) empty
// and, when margin_check, the target at distance >= max_length from S_R.
std::optional<std::vector<int>> decompose(const GraphWindow& w,
                                          const BinaryEdgeVector& target,
                                          const CycleBasisSet& basis,
                                          bool margin_check = true);

// The crossing-cycle construction for a minimal cutset Pi between two window
// vertices x and y and a nontrivial bipartition of Pi: finds paths avoiding
// the opposite part, decomposes their difference, and extracts a basis cycle
// meeting both parts.
struct CrossingWitness {
  int cycle_index = -1;          // the basis cycle meeting Pi_1 and Pi_2
  BinaryEdgeVector theta;        // path_1 minus the Pi_1-meeting cycles
  std::vector<int> part1_cycles; // basis indices of cycles meeting Pi_1
  BinaryEdgeVector path1;        // avoids Pi_2
  BinaryEdgeVector path2;        // avoids Pi_1
};
CrossingWitness crossing_cycle_witness(const GraphWindow& w,
                                       const std::vector<Edge>& cutset,
                                       const std::vector<int>& part1_indices,
                                       VertexId x, VertexId y,
                                       const CycleBasisSet& basis);

// Enumerates minimal origin-to-sphere cutsets up to n_max and checks that
// each is (t/2)-close for t = the max relator length; a violator, if any,
// is returned as a counterexample artifact.
struct PresentationBoundReport {
  int t = 0;
  int half_t = 0;
  int max_closeness = -1;
  bool ok = false;
  std::optional<Cutset> violator;
  std::vector<SupClosenessRow> table;
};
PresentationBoundReport verify_presentation_bound(
    const GraphWindow& w, const std::vector<std::vector<int>>& relators,
    int n_max,
    EdgeDistanceConvention convention = EdgeDistanceConvention::kSubdivision);

}  // namespace cutlab

#endif
