#pragma once
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdlab::cli {

using json = nlohmann::json;

// Typed, path-aware view of a JSON object. Every accessor marks its key as known; finish()
// rejects keys that no accessor asked for. Failures throw ConfigInvalid naming the full key path.
class Section {
 public:
  Section(const json& j, std::string path);

  bool has(const std::string& key) const;
  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  // Numbers that must be strictly positive.
  double positive(const std::string& key) const;
  double positive(const std::string& key, double fallback) const;
  long integer(const std::string& key) const;
  long integer(const std::string& key, long fallback) const;
  bool boolean(const std::string& key, bool fallback) const;
  std::string string(const std::string& key) const;
  std::string string(const std::string& key, const std::string& fallback) const;
  std::string choice(const std::string& key, const std::vector<std::string>& allowed) const;
  std::string choice(const std::string& key, const std::vector<std::string>& allowed, const std::string& fallback) const;
  std::vector<double> numbers(const std::string& key) const;
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback) const;
  std::vector<long> integers(const std::string& key) const;
  std::vector<long> integers(const std::string& key, const std::vector<long>& fallback) const;
  std::vector<std::string> strings(const std::string& key, const std::vector<std::string>& fallback) const;
  std::uint64_t seed(const std::string& key) const;
  Section sub(const std::string& key) const;  // missing sub-object reads as {}
  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }
  std::string key_path(const std::string& key) const;
  void finish() const;

 private:
  const json& get(const std::string& key) const;
  const json& j_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

[[noreturn]] void config_error(const std::string& path, const std::string& msg);

json load_config_file(const std::string& file);

// Grid given as a list, or as {"from", "to", "count", "scale": "linear"|"log"}.
std::vector<double> read_grid(const Section& s, const std::string& key);

}  // namespace cdlab::cli
