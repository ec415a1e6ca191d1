#ifndef CUTLAB_GROUPS_HPP
#define CUTLAB_GROUPS_HPP

#include <optional>

#include "cutlab/core.hpp"

namespace cutlab {

// Family-encoded normal form. The meaning of `data` is fixed per group:
//   Zd           : the integer vector, size d
//   free group   : reduced word, letters +i / -i for generator i (1-based)
//   lamplighter  : [position, lamp, lamp, ...] with lamps strictly increasing
// Groups only ever hand out canonical values.
struct GroupElement {
  std::vector<long long> data;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class Group {
 public:
  virtual ~Group() = default;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a,
                                const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& a) const = 0;
  virtual VertexKey serialize(const GroupElement& a) const = 0;
  virtual GroupElement parse(const VertexKey& k) const = 0;
  virtual std::string family() const = 0;
  bool is_identity(const GroupElement& a) const { return a == identity(); }
};

class ZdGroup : public Group {
 public:
  explicit ZdGroup(int d);
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a,
                        const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  VertexKey serialize(const GroupElement& a) const override;
  GroupElement parse(const VertexKey& k) const override;
  std::string family() const override;
  int dimension() const { return d_; }

 private:
  int d_;
};

class FreeGroup : public Group {
 public:
  explicit FreeGroup(int rank);
  GroupElement identity() const override { return {}; }
  GroupElement multiply(const GroupElement& a,
                        const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  VertexKey serialize(const GroupElement& a) const override;
  GroupElement parse(const VertexKey& k) const override;
  std::string family() const override;
  int rank() const { return rank_; }

 private:
  int rank_;
};

// Z wr Z_2: elements are (position, finite set of lit lamps). The product
// (p1,l1)(p2,l2) = (p1+p2, l1 xor (l2 shifted by +p1)).
class LamplighterGroup : public Group {
 public:
  GroupElement identity() const override { return {{0}}; }
  GroupElement multiply(const GroupElement& a,
                        const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  VertexKey serialize(const GroupElement& a) const override;
  GroupElement parse(const VertexKey& k) const override;
  std::string family() const override { return "lamplighter"; }

  static GroupElement make(long long position, std::vector<long long> lamps);
  static long long position(const GroupElement& a) { return a.data[0]; }
  static std::vector<long long> lamps(const GroupElement& a);
};

// Ordered, inverse-closed generating set; the order is the one shortlex and
// Cayley neighbor iteration use. Identity elements and duplicates rejected.
class GeneratingSet {
 public:
  GeneratingSet(std::shared_ptr<const Group> group,
                std::vector<GroupElement> gens);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const GroupElement& gen(int i) const { return gens_[i]; }
  const std::vector<GroupElement>& gens() const { return gens_; }
  int inverse_index(int i) const { return inverse_index_[i]; }

 private:
  std::shared_ptr<const Group> group_;
  std::vector<GroupElement> gens_;
  std::vector<int> inverse_index_;
};

// Left-to-right product of the indexed generators; empty word = identity.
GroupElement word_to_element(const GeneratingSet& gens,
                             const std::vector<int>& word);

class CayleyGraphProvider : public GraphProvider {
 public:
  explicit CayleyGraphProvider(GeneratingSet gens, std::string label = "");
  std::vector<VertexKey> neighbors(const VertexKey& v) const override;
  int degree_bound() const override { return gens_.size(); }
  VertexKey origin() const override;
  std::string family() const override;
  const GeneratingSet& generating_set() const { return gens_; }
  const Group& group() const { return gens_.group(); }

 private:
  GeneratingSet gens_;
  std::string label_;
};

// Declared finite presentation for families that ship one, as relator words
// over the generating set's indices. Z^d with the standard generators gets
// the commutator relators; the free group an empty list; others none.
std::optional<std::vector<std::vector<int>>> declared_relators(
    const GeneratingSet& gens);

// ---- shipped generating sets ----
GeneratingSet zd_standard_gens(int d);          // e1, e2, .., -e1, -e2, ..
GeneratingSet z2_king_gens();                   // 8 king moves
GeneratingSet free_gens(int rank);              // a, A, b, B, ..
GeneratingSet lamplighter_walk_gens();          // t, t^-1, toggle
GeneratingSet lamplighter_dl_gens();            // the DL(2,2)-matching four

}  // namespace cutlab

#endif
