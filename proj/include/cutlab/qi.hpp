#ifndef CUTLAB_QI_HPP
#define CUTLAB_QI_HPP

#include <functional>
#include <optional>

#include "cutlab/core.hpp"
#include "cutlab/cutsets.hpp"

namespace cutlab {

// A computable vertex bijection between two graphs, with the bi-Lipschitz
// constant certified on windows rather than assumed.
struct QuasiIsometryMap {
  std::string name;
  std::function<VertexKey(const VertexKey&)> forward;
  std::function<VertexKey(const VertexKey&)> inverse;
};

QuasiIsometryMap identity_map();                 // same keys on both sides
QuasiIsometryMap dl_to_lamplighter_map();        // DL(2,2) -> lamplighter keys

struct BilipschitzReport {
  int m = 0;                 // smallest integer constant valid on the sample
  long long pairs_checked = 0;
  bool round_trip_ok = true;
};

// Checks the sandwich (1/m) d_G <= d_G' <= m d_G over all pairs of the given
// sample vertices (ids in wg); every distance must be window-exact on both
// sides, else MarginError.
BilipschitzReport verify_bilipschitz(const QuasiIsometryMap& map,
                                     const GraphWindow& wg,
                                     const GraphWindow& wh,
                                     const std::vector<VertexId>& sample);

// All vertices within distance r of the origin (a convenient sample).
std::vector<VertexId> ball_ids(const GraphWindow& w, int r);

// The m-neighborhood in G' of the image of a cutset component; checked to be
// connected and to contain the image origin.
std::vector<VertexId> image_neighborhood(const QuasiIsometryMap& map,
                                         const GraphWindow& wg,
                                         const GraphWindow& wh,
                                         const std::vector<VertexId>& kappa,
                                         int m);

struct BoundaryGrowthReport {
  int boundary_g = 0;        // |external boundary of kappa| in G
  int boundary_h = 0;        // |external boundary of the image neighborhood|
  long long bound = 0;       // d^{2m} * boundary_g
  bool boundary_ok = false;
  int tau_minus_kappa = 0;   // |preimage of the image neighborhood minus kappa|
  long long tau_bound = 0;   // d^{m^2} * n
  bool tau_inside_m2_neighborhood = false;
  bool tau_ok = false;
};
BoundaryGrowthReport boundary_growth_check(const QuasiIsometryMap& map,
                                           const GraphWindow& wg,
                                           const GraphWindow& wh,
                                           const std::vector<VertexId>& kappa,
                                           int m, int cutset_size);

struct FiberRow {
  std::string image_key;  // canonical serialization of the image set
  int fiber_size = 0;
};
struct FiberReport {
  std::vector<FiberRow> rows;
  int max_fiber = 0;
  bool injective = true;
  long long kappa_count = 0;
};
// Groups the components of all size-n minimal cutsets in G by their image
// neighborhood in G'.
FiberReport fiber_experiment(const QuasiIsometryMap& map, const GraphWindow& wg,
                             const GraphWindow& wh, int n, int m,
                             const EnumerationLimits& lim = {});

struct TransferReport {
  int k = 0;
  int m = 0;
  int input_closeness_lb = 0;   // certified lower bound for C(delta G_k) in G
  bool precondition_ok = false; // input cutset not k-close (C > k)
  Cutset transferred;           // S_k in G'
  int transfer_closeness_lb = 0;
  double claimed_bound = 0.0;   // k/m - 2m
  bool vacuous = false;         // claimed bound <= 0
  bool bound_ok = false;        // transfer_closeness_lb > claimed bound
};
// Transfers the boundary cutset of G_k (a connected origin-containing set in
// G whose boundary is not k-close) through the map: S_k = the cutset of the
// m-neighborhood of the image, with the closeness bound k/m - 2m checked.
TransferReport transfer_noncloseness(const QuasiIsometryMap& map,
                                     const GraphWindow& wg,
                                     const GraphWindow& wh,
                                     const std::vector<VertexId>& g_k, int k,
                                     int m, EdgeDistanceConvention convention);

}  // namespace cutlab

#endif
