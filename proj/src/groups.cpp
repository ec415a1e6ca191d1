#include "cutlab/groups.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace cutlab {

namespace {

std::vector<long long> split_ll(const std::string& s, char sep) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    if (next > pos) {
      long long v = 0;
      auto res = std::from_chars(s.data() + pos, s.data() + next, v);
      if (res.ec != std::errc() || res.ptr != s.data() + next)
        throw std::invalid_argument("bad integer in key: " + s);
      out.push_back(v);
    }
    pos = next + 1;
  }
  return out;
}

std::string join_ll(const std::vector<long long>& xs, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

}  // namespace

// ---- Zd ----

ZdGroup::ZdGroup(int d) : d_(d) {
  if (d < 1) throw ConfigError("Zd dimension must be >= 1");
}

GroupElement ZdGroup::identity() const {
  return {std::vector<long long>(d_, 0)};
}

GroupElement ZdGroup::multiply(const GroupElement& a,
                               const GroupElement& b) const {
  GroupElement r = a;
  for (int i = 0; i < d_; ++i) r.data[i] += b.data[i];
  return r;
}

GroupElement ZdGroup::inverse(const GroupElement& a) const {
  GroupElement r = a;
  for (auto& x : r.data) x = -x;
  return r;
}

VertexKey ZdGroup::serialize(const GroupElement& a) const {
  return join_ll(a.data, ',');
}

GroupElement ZdGroup::parse(const VertexKey& k) const {
  GroupElement r{split_ll(k, ',')};
  if (static_cast<int>(r.data.size()) != d_)
    throw std::invalid_argument("bad Zd key: " + k);
  return r;
}

std::string ZdGroup::family() const { return "Z^" + std::to_string(d_); }

// ---- free group ----

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1) throw ConfigError("free group rank must be >= 1");
}

GroupElement FreeGroup::multiply(const GroupElement& a,
                                 const GroupElement& b) const {
  GroupElement r = a;
  for (long long letter : b.data) {
    if (!r.data.empty() && r.data.back() == -letter)
      r.data.pop_back();
    else
      r.data.push_back(letter);
  }
  return r;
}

GroupElement FreeGroup::inverse(const GroupElement& a) const {
  GroupElement r;
  r.data.reserve(a.data.size());
  for (auto it = a.data.rbegin(); it != a.data.rend(); ++it)
    r.data.push_back(-*it);
  return r;
}

VertexKey FreeGroup::serialize(const GroupElement& a) const {
  // letter i -> 'a'+i-1, inverse -> uppercase
  std::string s;
  for (long long letter : a.data) {
    if (letter > 0)
      s.push_back(static_cast<char>('a' + letter - 1));
    else
      s.push_back(static_cast<char>('A' - letter - 1));
  }
  return s.empty() ? "e" : s;
}

GroupElement FreeGroup::parse(const VertexKey& k) const {
  GroupElement r;
  if (k == "e") return r;
  for (char c : k) {
    if (c >= 'a' && c < 'a' + rank_)
      r.data.push_back(c - 'a' + 1);
    else if (c >= 'A' && c < 'A' + rank_)
      r.data.push_back(-(c - 'A' + 1));
    else
      throw std::invalid_argument("bad free-group key: " + k);
  }
  return r;
}

std::string FreeGroup::family() const { return "F_" + std::to_string(rank_); }

// ---- lamplighter ----

GroupElement LamplighterGroup::make(long long position,
                                    std::vector<long long> lamps) {
  std::sort(lamps.begin(), lamps.end());
  lamps.erase(std::unique(lamps.begin(), lamps.end()), lamps.end());
  GroupElement r{{position}};
  r.data.insert(r.data.end(), lamps.begin(), lamps.end());
  return r;
}

std::vector<long long> LamplighterGroup::lamps(const GroupElement& a) {
  return {a.data.begin() + 1, a.data.end()};
}

GroupElement LamplighterGroup::multiply(const GroupElement& a,
                                        const GroupElement& b) const {
  long long p1 = a.data[0];
  // symmetric difference of a's lamps with b's lamps translated by +p1
  std::vector<long long> merged;
  std::size_t i = 1, j = 1;
  while (i < a.data.size() || j < b.data.size()) {
    long long x = i < a.data.size() ? a.data[i]
                                    : std::numeric_limits<long long>::max();
    long long y = j < b.data.size() ? b.data[j] + p1
                                    : std::numeric_limits<long long>::max();
    if (x == y) {
      ++i;
      ++j;  // cancels mod 2
    } else if (x < y) {
      merged.push_back(x);
      ++i;
    } else {
      merged.push_back(y);
      ++j;
    }
  }
  GroupElement r{{p1 + b.data[0]}};
  r.data.insert(r.data.end(), merged.begin(), merged.end());
  return r;
}

GroupElement LamplighterGroup::inverse(const GroupElement& a) const {
  long long p = a.data[0];
  GroupElement r{{-p}};
  for (std::size_t i = 1; i < a.data.size(); ++i)
    r.data.push_back(a.data[i] - p);
  return r;
}

VertexKey LamplighterGroup::serialize(const GroupElement& a) const {
  std::string s = std::to_string(a.data[0]);
  s.push_back('|');
  s += join_ll({a.data.begin() + 1, a.data.end()}, ',');
  return s;
}

GroupElement LamplighterGroup::parse(const VertexKey& k) const {
  auto bar = k.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("bad lamplighter key: " + k);
  long long p = 0;
  std::from_chars(k.data(), k.data() + bar, p);
  auto lamps = split_ll(k.substr(bar + 1), ',');
  for (std::size_t i = 1; i < lamps.size(); ++i)
    if (lamps[i - 1] >= lamps[i])
      throw std::invalid_argument("non-canonical lamplighter key: " + k);
  return make(p, std::move(lamps));
}

// ---- generating sets ----

GeneratingSet::GeneratingSet(std::shared_ptr<const Group> group,
                             std::vector<GroupElement> gens)
    : group_(std::move(group)), gens_(std::move(gens)) {
  if (gens_.empty()) throw ConfigError("generating set must be nonempty");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (group_->is_identity(gens_[i]))
      throw ConfigError("generating set contains the identity");
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] == gens_[j])
        throw ConfigError("generating set contains a repeated element");
  }
  inverse_index_.assign(gens_.size(), -1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    GroupElement inv = group_->inverse(gens_[i]);
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (gens_[j] == inv) inverse_index_[i] = static_cast<int>(j);
    if (inverse_index_[i] < 0)
      throw ConfigError("generating set not closed under inverses: " +
                        group_->serialize(gens_[i]));
  }
}

GroupElement word_to_element(const GeneratingSet& gens,
                             const std::vector<int>& word) {
  GroupElement acc = gens.group().identity();
  for (int i : word) {
    if (i < 0 || i >= gens.size())
      throw std::out_of_range("generator index out of range");
    acc = gens.group().multiply(acc, gens.gen(i));
  }
  return acc;
}

CayleyGraphProvider::CayleyGraphProvider(GeneratingSet gens, std::string label)
    : gens_(std::move(gens)), label_(std::move(label)) {}

std::vector<VertexKey> CayleyGraphProvider::neighbors(
    const VertexKey& v) const {
  const Group& g = gens_.group();
  GroupElement e = g.parse(v);
  std::vector<VertexKey> out;
  out.reserve(gens_.size());
  for (int i = 0; i < gens_.size(); ++i) {
    VertexKey k = g.serialize(g.multiply(e, gens_.gen(i)));
    if (std::find(out.begin(), out.end(), k) == out.end())
      out.push_back(std::move(k));
  }
  return out;
}

VertexKey CayleyGraphProvider::origin() const {
  return gens_.group().serialize(gens_.group().identity());
}

std::string CayleyGraphProvider::family() const {
  std::string f = "cayley:" + gens_.group().family();
  if (!label_.empty()) f += ":" + label_;
  return f;
}

std::optional<std::vector<std::vector<int>>> declared_relators(
    const GeneratingSet& gens) {
  const Group& g = gens.group();
  if (auto* fg = dynamic_cast<const FreeGroup*>(&g)) {
    (void)fg;
    return std::vector<std::vector<int>>{};
  }
  auto* zd = dynamic_cast<const ZdGroup*>(&g);
  if (!zd) return std::nullopt;
  int d = zd->dimension();
  // Only the standard basis presentation is declared: require each +-e_i to
  // be present, and nothing else.
  if (gens.size() != 2 * d) return std::nullopt;
  std::vector<int> plus(d, -1), minus(d, -1);
  for (int i = 0; i < gens.size(); ++i) {
    const auto& v = gens.gen(i).data;
    int nz = -1, count = 0;
    for (int c = 0; c < d; ++c)
      if (v[c] != 0) {
        nz = c;
        ++count;
      }
    if (count != 1 || (v[nz] != 1 && v[nz] != -1)) return std::nullopt;
    (v[nz] == 1 ? plus : minus)[nz] = i;
  }
  std::vector<std::vector<int>> relators;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      relators.push_back({plus[i], plus[j], minus[i], minus[j]});
  return relators;
}

// ---- shipped generating sets ----

GeneratingSet zd_standard_gens(int d) {
  auto g = std::make_shared<ZdGroup>(d);
  std::vector<GroupElement> gens;
  for (int i = 0; i < d; ++i) {
    GroupElement e = g->identity();
    e.data[i] = 1;
    gens.push_back(e);
  }
  for (int i = 0; i < d; ++i) {
    GroupElement e = g->identity();
    e.data[i] = -1;
    gens.push_back(e);
  }
  return GeneratingSet(g, std::move(gens));
}

GeneratingSet z2_king_gens() {
  auto g = std::make_shared<ZdGroup>(2);
  std::vector<GroupElement> gens;
  const long long moves[8][2] = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                 {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (auto& m : moves) gens.push_back({{m[0], m[1]}});
  return GeneratingSet(g, std::move(gens));
}

GeneratingSet free_gens(int rank) {
  auto g = std::make_shared<FreeGroup>(rank);
  std::vector<GroupElement> gens;
  for (int i = 1; i <= rank; ++i) {
    gens.push_back({{static_cast<long long>(i)}});
    gens.push_back({{static_cast<long long>(-i)}});
  }
  return GeneratingSet(g, std::move(gens));
}

GeneratingSet lamplighter_walk_gens() {
  auto g = std::make_shared<LamplighterGroup>();
  return GeneratingSet(
      g, {LamplighterGroup::make(1, {}), LamplighterGroup::make(-1, {}),
          LamplighterGroup::make(0, {0})});
}

GeneratingSet lamplighter_dl_gens() {
  auto g = std::make_shared<LamplighterGroup>();
  return GeneratingSet(
      g, {LamplighterGroup::make(1, {}), LamplighterGroup::make(1, {0}),
          LamplighterGroup::make(-1, {}), LamplighterGroup::make(-1, {-1})});
}

}  // namespace cutlab
