#include "bundle.hpp"

#include <openssl/evp.h>

#include <boost/version.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "cdlab/errors.hpp"

namespace cdlab::cli {

namespace {

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

// JSON has no NaN or infinity; non-finite values are stored as null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json nums(const std::vector<double>& v) {
  json a = json::array();
  for (double d : v) a.push_back(num(d));
  return a;
}

double read_num(const json& j, const char* key) {
  const json& v = j.at(key);
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

std::vector<double> read_nums(const json& j, const char* key) {
  std::vector<double> out;
  for (const auto& v : j.at(key)) out.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
  return out;
}

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

bool CycleSummary::operator==(const CycleSummary& o) const {
  return start == o.start && converged == o.converged && same(period, o.period) && same(fft_period, o.fft_period) &&
         same(return_distance, o.return_distance) && same(energy, o.energy) && same(energy_defect, o.energy_defect) &&
         same(floquet_re, o.floquet_re) && same(floquet_im, o.floquet_im) &&
         same(quantization_integrals, o.quantization_integrals) && error == o.error;
}

bool LieSummary::operator==(const LieSummary& o) const {
  return model == o.model && level == o.level && series == o.series && same(params, o.params) &&
         xi_kind == o.xi_kind && same(xi, o.xi) && same(omega, o.omega) && same(epsilon, o.epsilon) &&
         same(residual, o.residual) && same(consistency, o.consistency) && classification == o.classification &&
         iterations == o.iterations && converged == o.converged;
}

bool CheckResult::operator==(const CheckResult& o) const {
  return name == o.name && same(residual, o.residual) && same(tolerance, o.tolerance) && passed == o.passed;
}

bool ResultBundle::operator==(const ResultBundle& o) const {
  return command == o.command && config_hash == o.config_hash && version == o.version &&
         eigen_version == o.eigen_version && boost_version == o.boost_version && config == o.config &&
         cycles == o.cycles && lie_candidates == o.lie_candidates && checks == o.checks;
}

std::string config_hash(const json& config) {
  const std::string text = config.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(Errc::InvalidArgument, "SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

ResultBundle make_bundle(const std::string& command, const json& config) {
  ResultBundle b;
  b.command = command;
  b.config = config;
  b.config_hash = config_hash(config);
  b.version = "0.1.0";
  b.eigen_version = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                    std::to_string(EIGEN_MINOR_VERSION);
  b.boost_version = std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) + "." +
                    std::to_string(BOOST_VERSION % 100);
  return b;
}

CycleSummary summarize(const analysis::CycleReport& r, int start) {
  CycleSummary s;
  s.start = start;
  s.converged = r.converged;
  s.period = r.period;
  s.fft_period = r.fft_period;
  s.return_distance = r.return_distance;
  s.energy = r.energy;
  s.energy_defect = r.energy_defect;
  for (Eigen::Index k = 0; k < r.floquet_multipliers.size(); ++k) {
    s.floquet_re.push_back(r.floquet_multipliers[k].real());
    s.floquet_im.push_back(r.floquet_multipliers[k].imag());
  }
  s.quantization_integrals = r.quantization_integrals;
  return s;
}

LieSummary summarize(const lie::LieCandidate& c, const std::string& model, int level, int series) {
  LieSummary s;
  s.model = model;
  s.level = level;
  s.series = series;
  s.params = to_std(c.params);
  s.xi_kind = lie::kind_name(c.xi.kind);
  s.xi = to_std(c.xi.payload);
  s.omega = c.omega;
  s.epsilon = c.epsilon;
  s.residual = c.residual;
  s.consistency = c.consistency;
  s.classification = lie::classification_name(c.classification);
  s.iterations = c.iterations;
  s.converged = c.converged;
  return s;
}

json to_json(const ResultBundle& b) {
  json j;
  j["metadata"] = {{"command", b.command},
                   {"config_hash", b.config_hash},
                   {"versions", {{"cdlab", b.version}, {"eigen", b.eigen_version}, {"boost", b.boost_version}}}};
  j["config"] = b.config;
  j["cycle_reports"] = json::array();
  for (const auto& c : b.cycles)
    j["cycle_reports"].push_back({{"start", c.start},
                                  {"converged", c.converged},
                                  {"period", num(c.period)},
                                  {"fft_period", num(c.fft_period)},
                                  {"return_distance", num(c.return_distance)},
                                  {"energy", num(c.energy)},
                                  {"energy_defect", num(c.energy_defect)},
                                  {"floquet_re", nums(c.floquet_re)},
                                  {"floquet_im", nums(c.floquet_im)},
                                  {"quantization_integrals", nums(c.quantization_integrals)},
                                  {"error", c.error}});
  j["lie_candidates"] = json::array();
  for (const auto& l : b.lie_candidates)
    j["lie_candidates"].push_back({{"model", l.model},
                                   {"level", l.level},
                                   {"series", l.series},
                                   {"params", nums(l.params)},
                                   {"xi_kind", l.xi_kind},
                                   {"xi", nums(l.xi)},
                                   {"omega", num(l.omega)},
                                   {"epsilon", num(l.epsilon)},
                                   {"residual", num(l.residual)},
                                   {"consistency", num(l.consistency)},
                                   {"classification", l.classification},
                                   {"iterations", l.iterations},
                                   {"converged", l.converged}});
  j["verification"] = json::array();
  for (const auto& c : b.checks)
    j["verification"].push_back(
        {{"check", c.name}, {"residual", num(c.residual)}, {"tolerance", num(c.tolerance)}, {"passed", c.passed}});
  return j;
}

ResultBundle bundle_from_json(const json& j) {
  ResultBundle b;
  try {
    const json& m = j.at("metadata");
    b.command = m.at("command").get<std::string>();
    b.config_hash = m.at("config_hash").get<std::string>();
    b.version = m.at("versions").at("cdlab").get<std::string>();
    b.eigen_version = m.at("versions").at("eigen").get<std::string>();
    b.boost_version = m.at("versions").at("boost").get<std::string>();
    b.config = j.at("config");
    for (const auto& c : j.at("cycle_reports")) {
      CycleSummary s;
      s.start = c.at("start").get<int>();
      s.converged = c.at("converged").get<bool>();
      s.period = read_num(c, "period");
      s.fft_period = read_num(c, "fft_period");
      s.return_distance = read_num(c, "return_distance");
      s.energy = read_num(c, "energy");
      s.energy_defect = read_num(c, "energy_defect");
      s.floquet_re = read_nums(c, "floquet_re");
      s.floquet_im = read_nums(c, "floquet_im");
      s.quantization_integrals = read_nums(c, "quantization_integrals");
      s.error = c.at("error").get<std::string>();
      b.cycles.push_back(s);
    }
    for (const auto& c : j.at("lie_candidates")) {
      LieSummary s;
      s.model = c.at("model").get<std::string>();
      s.level = c.at("level").get<int>();
      s.series = c.at("series").get<int>();
      s.params = read_nums(c, "params");
      s.xi_kind = c.at("xi_kind").get<std::string>();
      s.xi = read_nums(c, "xi");
      s.omega = read_num(c, "omega");
      s.epsilon = read_num(c, "epsilon");
      s.residual = read_num(c, "residual");
      s.consistency = read_num(c, "consistency");
      s.classification = c.at("classification").get<std::string>();
      s.iterations = c.at("iterations").get<int>();
      s.converged = c.at("converged").get<bool>();
      b.lie_candidates.push_back(s);
    }
    for (const auto& c : j.at("verification")) {
      CheckResult r;
      r.name = c.at("check").get<std::string>();
      r.residual = read_num(c, "residual");
      r.tolerance = read_num(c, "tolerance");
      r.passed = c.at("passed").get<bool>();
      b.checks.push_back(r);
    }
  } catch (const json::exception& e) {
    config_error("", std::string("malformed result bundle: ") + e.what());
  }
  if (config_hash(b.config) != b.config_hash) config_error("/metadata/config_hash", "does not match the stored config");
  return b;
}

void write_bundle(const ResultBundle& b, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + file + "'");
  out << to_json(b).dump(2) << '\n';
}

ResultBundle read_bundle(const std::string& file) {
  std::ifstream in(file);
  if (!in) config_error("", "cannot open result bundle '" + file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    config_error("", std::string("malformed JSON: ") + e.what());
  }
  return bundle_from_json(j);
}

}  // namespace cdlab::cli
