#include "cutlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cutlab/dl.hpp"
#include "cutlab/providers.hpp"

namespace cutlab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

ExperimentConfig ExperimentConfig::parse_text(const std::string& text,
                                              const std::string& origin) {
  ExperimentConfig cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": empty section name");
      cfg.sections_[section];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected key = value");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": key outside any [section]");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (cfg.sections_[section].count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": duplicate key '" + key + "' in [" + section + "]");
    cfg.sections_[section][key] = value;
    cfg.key_lines_[section + "." + key] = lineno;
  }
  return cfg;
}

bool ExperimentConfig::has(const std::string& section,
                           const std::string& key) const {
  auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key);
}

std::string ExperimentConfig::get(const std::string& section,
                                  const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end())
    throw ConfigError(origin_ + ": missing [" + section + "] section");
  auto k = s->second.find(key);
  if (k == s->second.end())
    throw ConfigError(origin_ + ": missing key '" + key + "' in [" + section +
                      "]");
  return k->second;
}

std::string ExperimentConfig::get_or(const std::string& section,
                                     const std::string& key,
                                     const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

long long ExperimentConfig::get_int(const std::string& section,
                                    const std::string& key) const {
  auto v = get(section, key);
  try {
    std::size_t used = 0;
    long long r = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    fail(section, key, "expected an integer, got '" + v + "'");
  }
}

long long ExperimentConfig::get_int_or(const std::string& section,
                                       const std::string& key,
                                       long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

bool ExperimentConfig::get_bool_or(const std::string& section,
                                   const std::string& key,
                                   bool fallback) const {
  if (!has(section, key)) return fallback;
  auto v = get(section, key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(section, key, "expected a boolean, got '" + v + "'");
}

std::vector<int> ExperimentConfig::get_int_list(const std::string& section,
                                                const std::string& key) const {
  std::vector<int> out;
  for (const auto& part : split(get(section, key), ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      fail(section, key, "expected a comma-separated integer list");
    }
  }
  if (out.empty()) fail(section, key, "empty list");
  return out;
}

void ExperimentConfig::fail(const std::string& section, const std::string& key,
                            const std::string& message) const {
  auto it = key_lines_.find(section + "." + key);
  std::string loc = origin_;
  if (it != key_lines_.end()) loc += ":" + std::to_string(it->second);
  throw ConfigError(loc + ": [" + section + "] " + key + ": " + message);
}

namespace {

GroupElement parse_generator_word(const ExperimentConfig& cfg,
                                  const std::string& section,
                                  const Group& g, const std::string& word) {
  // A generator is a dot-separated word over family primitives.
  GroupElement acc = g.identity();
  for (const auto& tok : split(word, '.')) {
    GroupElement prim = g.identity();
    if (const auto* zd = dynamic_cast<const ZdGroup*>(&g)) {
      bool neg = tok.size() > 1 && tok[0] == '-';
      const std::string base = neg ? tok.substr(1) : tok;
      if (base.size() < 2 || base[0] != 'e')
        cfg.fail(section, "gens", "unknown Z^d primitive '" + tok + "'");
      int axis = std::stoi(base.substr(1));
      if (axis < 1 || axis > zd->dimension())
        cfg.fail(section, "gens", "axis out of range in '" + tok + "'");
      prim.data[axis - 1] = neg ? -1 : 1;
    } else if (dynamic_cast<const FreeGroup*>(&g)) {
      prim = g.parse(tok);
      if (prim.data.size() != 1)
        cfg.fail(section, "gens", "free-group primitive must be one letter");
    } else if (dynamic_cast<const LamplighterGroup*>(&g)) {
      if (tok == "t")
        prim = LamplighterGroup::make(1, {});
      else if (tok == "-t")
        prim = LamplighterGroup::make(-1, {});
      else if (tok == "l")
        prim = LamplighterGroup::make(0, {0});
      else
        cfg.fail(section, "gens", "unknown lamplighter primitive '" + tok +
                                      "' (use t, -t, l)");
    } else {
      cfg.fail(section, "gens", "explicit generators unsupported here");
    }
    acc = g.multiply(acc, prim);
  }
  return acc;
}

}  // namespace

std::shared_ptr<const GraphProvider> make_provider(const ExperimentConfig& cfg,
                                                   const std::string& section) {
  std::string family = cfg.get(section, "family");
  if (family == "hex") return std::make_shared<HexLatticeProvider>();
  if (family == "tree")
    return std::make_shared<RegularTreeProvider>(
        static_cast<int>(cfg.get_int(section, "d")));
  if (family == "dl")
    return std::make_shared<DLGraphProvider>(
        static_cast<int>(cfg.get_int(section, "k")),
        static_cast<int>(cfg.get_int(section, "n")));

  if (family == "zd") {
    int d = static_cast<int>(cfg.get_int_or(section, "d", 2));
    std::string gens = cfg.get_or(section, "gens", "std");
    if (gens == "std")
      return std::make_shared<CayleyGraphProvider>(zd_standard_gens(d), "std");
    if (gens == "king") {
      if (d != 2) cfg.fail(section, "gens", "king preset requires d = 2");
      return std::make_shared<CayleyGraphProvider>(z2_king_gens(), "king");
    }
    auto g = std::make_shared<ZdGroup>(d);
    std::vector<GroupElement> list;
    for (const auto& word : split(gens, ','))
      list.push_back(parse_generator_word(cfg, section, *g, word));
    return std::make_shared<CayleyGraphProvider>(GeneratingSet(g, list),
                                                 "custom");
  }
  if (family == "free") {
    int k = static_cast<int>(cfg.get_int_or(section, "k", 2));
    return std::make_shared<CayleyGraphProvider>(free_gens(k), "std");
  }
  if (family == "lamplighter") {
    std::string gens = cfg.get_or(section, "gens", "walk");
    if (gens == "walk")
      return std::make_shared<CayleyGraphProvider>(lamplighter_walk_gens(),
                                                   "walk");
    if (gens == "dl")
      return std::make_shared<CayleyGraphProvider>(lamplighter_dl_gens(), "dl");
    auto g = std::make_shared<LamplighterGroup>();
    std::vector<GroupElement> list;
    for (const auto& word : split(gens, ','))
      list.push_back(parse_generator_word(cfg, section, *g, word));
    return std::make_shared<CayleyGraphProvider>(GeneratingSet(g, list),
                                                 "custom");
  }
  cfg.fail(section, "family", "unknown family '" + family + "'");
}

std::string provider_grammar_help() {
  return
      "provider families ([provider] / [target] section):\n"
      "  family = zd           d = <dim>, gens = std | king | <words>\n"
      "  family = hex          (honeycomb lattice, 3-regular)\n"
      "  family = tree         d = <degree>\n"
      "  family = free         k = <rank>\n"
      "  family = lamplighter  gens = walk | dl | <words>\n"
      "  family = dl           k = <k>, n = <n>\n"
      "explicit generators: comma-separated words, each a dot-separated\n"
      "product of primitives (Z^d: e1, -e1, ...; lamplighter: t, -t, l).\n"
      "Every generating set must be closed under inverses.\n";
}

}  // namespace cutlab
