#pragma once
#include <string>
#include <vector>

#include "cdlab/analysis/cycle.hpp"
#include "cdlab/lie/solver.hpp"
#include "config.hpp"

namespace cdlab::cli {

struct CycleSummary {
  int start = 0;
  bool converged = false;
  double period = 0.0;
  double fft_period = 0.0;
  double return_distance = 0.0;
  double energy = 0.0;
  double energy_defect = 0.0;
  std::vector<double> floquet_re, floquet_im;
  std::vector<double> quantization_integrals;
  std::string error;  // empty when detection succeeded

  bool operator==(const CycleSummary&) const;
};

struct LieSummary {
  std::string model;
  int level = 0;
  int series = 0;
  std::vector<double> params;
  std::string xi_kind;
  std::vector<double> xi;
  double omega = 0.0;
  double epsilon = 0.0;
  double residual = 0.0;
  double consistency = 0.0;
  std::string classification;
  int iterations = 0;
  bool converged = false;

  bool operator==(const LieSummary&) const;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  bool operator==(const CheckResult&) const;
};

struct ResultBundle {
  std::string command;
  std::string config_hash;
  std::string version;
  std::string eigen_version;
  std::string boost_version;
  json config;
  std::vector<CycleSummary> cycles;
  std::vector<LieSummary> lie_candidates;
  std::vector<CheckResult> checks;

  bool operator==(const ResultBundle&) const;
};

// Lower-case hex SHA-256 of the canonical (key-sorted, compact) serialization.
std::string config_hash(const json& config);

ResultBundle make_bundle(const std::string& command, const json& config);
CycleSummary summarize(const analysis::CycleReport& r, int start);
LieSummary summarize(const lie::LieCandidate& c, const std::string& model, int level, int series);

json to_json(const ResultBundle& b);
// Throws ConfigInvalid when the stored hash does not match the stored config.
ResultBundle bundle_from_json(const json& j);

void write_bundle(const ResultBundle& b, const std::string& file);
ResultBundle read_bundle(const std::string& file);

}  // namespace cdlab::cli
