#include "cutlab/providers.hpp"

#include <charconv>

namespace cutlab {

namespace {

std::pair<long long, long long> parse_pair(const VertexKey& k) {
  auto comma = k.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("bad lattice key: " + k);
  long long x = 0, y = 0;
  std::from_chars(k.data(), k.data() + comma, x);
  std::from_chars(k.data() + comma + 1, k.data() + k.size(), y);
  return {x, y};
}

VertexKey pair_key(long long x, long long y) {
  return std::to_string(x) + "," + std::to_string(y);
}

}  // namespace

std::vector<VertexKey> HexLatticeProvider::neighbors(const VertexKey& v) const {
  auto [x, y] = parse_pair(v);
  std::vector<VertexKey> out;
  out.push_back(pair_key(x - 1, y));
  out.push_back(pair_key(x + 1, y));
  if ((x + y) % 2 == 0)
    out.push_back(pair_key(x, y + 1));
  else
    out.push_back(pair_key(x, y - 1));
  return out;
}

RegularTreeProvider::RegularTreeProvider(int degree) : degree_(degree) {
  if (degree < 2) throw ConfigError("tree degree must be >= 2");
}

std::string RegularTreeProvider::family() const {
  return "tree(" + std::to_string(degree_) + ")";
}

std::vector<VertexKey> RegularTreeProvider::neighbors(
    const VertexKey& v) const {
  std::vector<VertexKey> out;
  if (v.empty()) {
    for (int c = 0; c < degree_; ++c) out.push_back(std::to_string(c));
    return out;
  }
  auto dot = v.rfind('.');
  out.push_back(dot == std::string::npos ? VertexKey("") : v.substr(0, dot));
  for (int c = 0; c + 1 < degree_; ++c)
    out.push_back(v + "." + std::to_string(c));
  return out;
}

}  // namespace cutlab
