#include "cutlab/dl.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cutlab {

namespace {

using Labels = std::vector<std::pair<long long, int>>;

std::string labels_str(const Labels& ls) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) os << ',';
    os << ls[i].first;
    if (ls[i].second != 1) os << ':' << ls[i].second;
  }
  return os.str();
}

Labels parse_labels(const std::string& s) {
  Labels out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    auto colon = s.find(':', pos);
    long long p = 0;
    int val = 1;
    if (colon != std::string::npos && colon < next) {
      std::from_chars(s.data() + pos, s.data() + colon, p);
      std::from_chars(s.data() + colon + 1, s.data() + next, val);
    } else {
      std::from_chars(s.data() + pos, s.data() + next, p);
    }
    out.emplace_back(p, val);
    pos = next + 1;
  }
  return out;
}

// set position -> value, dropping zero entries, keeping sort order
Labels with_label(const Labels& ls, long long pos, int val) {
  Labels out;
  bool placed = false;
  for (const auto& [p, v] : ls) {
    if (p == pos) continue;
    if (!placed && pos < p && val != 0) {
      out.emplace_back(pos, val);
      placed = true;
    }
    out.emplace_back(p, v);
  }
  if (!placed && val != 0) out.emplace_back(pos, val);
  return out;
}

Labels without_position(const Labels& ls, long long pos) {
  return with_label(ls, pos, 0);
}

}  // namespace

DLGraphProvider::DLGraphProvider(int k, int n) : k_(k), n_(n) {
  if (k < 2 || n < 2) throw ConfigError("DL(k,n) requires k,n >= 2");
}

VertexKey DLGraphProvider::serialize(const DLVertex& v) {
  return std::to_string(v.level) + "|" + labels_str(v.a) + "|" +
         labels_str(v.b);
}

DLVertex DLGraphProvider::parse(const VertexKey& key) {
  auto bar1 = key.find('|');
  auto bar2 = key.find('|', bar1 + 1);
  if (bar1 == std::string::npos || bar2 == std::string::npos)
    throw std::invalid_argument("bad DL key: " + key);
  DLVertex v;
  std::from_chars(key.data(), key.data() + bar1, v.level);
  v.a = parse_labels(key.substr(bar1 + 1, bar2 - bar1 - 1));
  v.b = parse_labels(key.substr(bar2 + 1));
  return v;
}

VertexKey DLGraphProvider::origin() const { return "0||"; }

std::string DLGraphProvider::family() const {
  return "DL(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
}

std::vector<VertexKey> DLGraphProvider::neighbors(const VertexKey& key) const {
  DLVertex v = parse(key);
  std::vector<VertexKey> out;
  out.reserve(k_ + n_);
  // down: first-tree child (new label at position `level`), second-tree
  // parent (drops its label at `level`)
  for (int alpha = 0; alpha < k_; ++alpha) {
    DLVertex u;
    u.level = v.level + 1;
    u.a = with_label(v.a, v.level, alpha);
    u.b = without_position(v.b, v.level);
    out.push_back(serialize(u));
  }
  // up: first-tree parent (drops label at level-1), second-tree child (new
  // label at level-1)
  for (int beta = 0; beta < n_; ++beta) {
    DLVertex u;
    u.level = v.level - 1;
    u.a = without_position(v.a, v.level - 1);
    u.b = with_label(v.b, v.level - 1, beta);
    out.push_back(serialize(u));
  }
  return out;
}

GroupElement lamplighter_from_dl(const DLVertex& v) {
  std::vector<long long> lamps;
  for (const auto& [p, val] : v.a) {
    if (val != 1) throw std::invalid_argument("DL vertex is not in DL(2,2)");
    lamps.push_back(p);
  }
  for (const auto& [p, val] : v.b) {
    if (val != 1) throw std::invalid_argument("DL vertex is not in DL(2,2)");
    lamps.push_back(p);
  }
  return LamplighterGroup::make(v.level, std::move(lamps));
}

DLVertex dl_from_lamplighter(const GroupElement& g) {
  DLVertex v;
  v.level = LamplighterGroup::position(g);
  for (long long lamp : LamplighterGroup::lamps(g)) {
    if (lamp < v.level)
      v.a.emplace_back(lamp, 1);
    else
      v.b.emplace_back(lamp, 1);
  }
  return v;
}

VertexKey lamplighter_key_from_dl_key(const VertexKey& k) {
  return LamplighterGroup().serialize(
      lamplighter_from_dl(DLGraphProvider::parse(k)));
}

VertexKey dl_key_from_lamplighter_key(const VertexKey& k) {
  return DLGraphProvider::serialize(
      dl_from_lamplighter(LamplighterGroup().parse(k)));
}

SubtreeBlock subtree_block(const GraphWindow& w, int k) {
  const auto* dl = dynamic_cast<const DLGraphProvider*>(&w.provider());
  if (!dl) throw ConfigError("subtree_block requires a DL window");
  if (k < 1) throw ConfigError("subtree_block requires k >= 1");

  SubtreeBlock out;
  out.k = k;
  for (VertexId v = 0; v < w.size(); ++v) {
    DLVertex d = DLGraphProvider::parse(w.key_of(v));
    if (d.level < 0 || d.level > k) continue;
    bool ok = true;
    for (const auto& [p, val] : d.a)
      if (p < 0 || p >= d.level) ok = false;  // offspring of o only
    for (const auto& [p, val] : d.b)
      if (p < d.level || p >= k) ok = false;  // offspring of o' only
    if (!ok) continue;
    out.vertices.push_back(v);
    if (d.level == k) out.first_leaf_side.push_back(v);
    if (d.level == 0) out.second_leaf_side.push_back(v);
  }

  // completeness: level i holds k^i * n^{k-i} vertices
  long long expected = 0, ki = 1;
  for (int i = 0; i <= k; ++i) {
    long long ni = 1;
    for (int j = 0; j < k - i; ++j) ni *= dl->n();
    expected += ki * ni;
    ki *= dl->k();
  }
  if (static_cast<long long>(out.vertices.size()) != expected)
    throw MarginError("subtree_block: window radius too small for k=" +
                      std::to_string(k));
  // margin: the block and its 1-neighborhood must be window-exact
  for (VertexId v : out.vertices)
    if (w.dist_o(v) + 1 > w.radius() - 1)
      throw MarginError("subtree_block: window radius too small for k=" +
                        std::to_string(k));
  out.cut = edge_boundary(w, out.vertices);
  return out;
}

}  // namespace cutlab
