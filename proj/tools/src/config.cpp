#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cdlab/errors.hpp"

namespace cdlab::cli {

void config_error(const std::string& path, const std::string& msg) {
  throw Error(Errc::ConfigInvalid, (path.empty() ? "/" : path) + ": " + msg);
}

json load_config_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) config_error("", "cannot open config file '" + file + "'");
  try {
    return json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    config_error("", std::string("malformed JSON in '") + file + "': " + e.what());
  }
}

Section::Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) config_error(path_, "expected an object");
}

std::string Section::key_path(const std::string& key) const { return path_ + "/" + key; }

bool Section::has(const std::string& key) const {
  seen_.insert(key);
  return j_.contains(key);
}

const json& Section::get(const std::string& key) const {
  seen_.insert(key);
  if (!j_.contains(key)) config_error(key_path(key), "required key missing");
  return j_.at(key);
}

double Section::number(const std::string& key) const {
  const json& v = get(key);
  if (!v.is_number()) config_error(key_path(key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) config_error(key_path(key), "expected a finite number");
  return d;
}

double Section::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

double Section::positive(const std::string& key) const {
  const double d = number(key);
  if (!(d > 0.0)) config_error(key_path(key), "must be positive");
  return d;
}

double Section::positive(const std::string& key, double fallback) const {
  return has(key) ? positive(key) : fallback;
}

long Section::integer(const std::string& key) const {
  const json& v = get(key);
  if (!v.is_number_integer()) config_error(key_path(key), "expected an integer");
  return v.get<long>();
}

long Section::integer(const std::string& key, long fallback) const { return has(key) ? integer(key) : fallback; }

bool Section::boolean(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const json& v = get(key);
  if (!v.is_boolean()) config_error(key_path(key), "expected true or false");
  return v.get<bool>();
}

std::string Section::string(const std::string& key) const {
  const json& v = get(key);
  if (!v.is_string()) config_error(key_path(key), "expected a string");
  return v.get<std::string>();
}

std::string Section::string(const std::string& key, const std::string& fallback) const {
  return has(key) ? string(key) : fallback;
}

std::string Section::choice(const std::string& key, const std::vector<std::string>& allowed) const {
  const std::string v = string(key);
  for (const auto& a : allowed)
    if (a == v) return v;
  std::string list;
  for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
  config_error(key_path(key), "'" + v + "' is not one of {" + list + "}");
}

std::string Section::choice(const std::string& key, const std::vector<std::string>& allowed,
                            const std::string& fallback) const {
  return has(key) ? choice(key, allowed) : fallback;
}

std::vector<double> Section::numbers(const std::string& key) const {
  const json& v = get(key);
  if (!v.is_array()) config_error(key_path(key), "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) config_error(key_path(key) + "/" + std::to_string(i), "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<double> Section::numbers(const std::string& key, const std::vector<double>& fallback) const {
  return has(key) ? numbers(key) : fallback;
}

std::vector<long> Section::integers(const std::string& key) const {
  const json& v = get(key);
  if (!v.is_array()) config_error(key_path(key), "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) config_error(key_path(key) + "/" + std::to_string(i), "expected an integer");
    out.push_back(v[i].get<long>());
  }
  return out;
}

std::vector<long> Section::integers(const std::string& key, const std::vector<long>& fallback) const {
  return has(key) ? integers(key) : fallback;
}

std::vector<std::string> Section::strings(const std::string& key, const std::vector<std::string>& fallback) const {
  if (!has(key)) return fallback;
  const json& v = get(key);
  if (!v.is_array()) config_error(key_path(key), "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) config_error(key_path(key) + "/" + std::to_string(i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::uint64_t Section::seed(const std::string& key) const {
  const json& v = get(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    config_error(key_path(key), "expected a non-negative integer seed");
  return v.get<std::uint64_t>();
}

Section Section::sub(const std::string& key) const {
  static const json empty = json::object();
  seen_.insert(key);
  if (!j_.contains(key)) return Section(empty, key_path(key));
  return Section(j_.at(key), key_path(key));
}

void Section::finish() const {
  for (const auto& [k, v] : j_.items())
    if (!seen_.count(k)) config_error(key_path(k), "unknown key");
}

std::vector<double> read_grid(const Section& s, const std::string& key) {
  if (!s.has(key)) config_error(s.key_path(key), "required key missing");
  const json& v = s.raw().at(key);
  if (v.is_array()) return s.numbers(key);
  const Section g = s.sub(key);
  const double from = g.number("from"), to = g.number("to");
  const long count = g.integer("count");
  const std::string scale = g.choice("scale", {"linear", "log"}, "linear");
  g.finish();
  if (count < 0) config_error(g.key_path("count"), "must be non-negative");
  if (scale == "log" && !(from > 0 && to > 0)) config_error(g.path(), "log grid needs positive bounds");
  std::vector<double> out;
  for (long k = 0; k < count; ++k) {
    const double u = count == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(count - 1);
    out.push_back(scale == "log" ? std::exp(std::log(from) + u * (std::log(to) - std::log(from)))
                                 : from + u * (to - from));
  }
  return out;
}

}  // namespace cdlab::cli
