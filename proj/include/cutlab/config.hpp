#ifndef CUTLAB_CONFIG_HPP
#define CUTLAB_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutlab/core.hpp"
#include "cutlab/groups.hpp"

namespace cutlab {

// Sectioned key/value experiment config. Parse errors carry file:line.
class ExperimentConfig {
 public:
  static ExperimentConfig parse_file(const std::string& path);
  static ExperimentConfig parse_text(const std::string& text,
                                     const std::string& origin = "<memory>");

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int_or(const std::string& section, const std::string& key,
                       long long fallback) const;
  bool get_bool_or(const std::string& section, const std::string& key,
                   bool fallback) const;
  std::vector<int> get_int_list(const std::string& section,
                                const std::string& key) const;

  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return sections_;
  }
  const std::string& origin() const { return origin_; }

  // location-aware error for schema violations
  [[noreturn]] void fail(const std::string& section, const std::string& key,
                         const std::string& message) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
  std::map<std::string, int> key_lines_;  // "section.key" -> line
  std::string origin_;
};

// Provider construction from a config section (family + parameters +
// generating set).
std::shared_ptr<const GraphProvider> make_provider(
    const ExperimentConfig& cfg, const std::string& section);

// Families and generating-set presets, for `list-providers`.
std::string provider_grammar_help();

}  // namespace cutlab

#endif
