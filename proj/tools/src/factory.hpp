#pragma once
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cdlab/analysis/cycle.hpp"
#include "cdlab/cdcore/integrator.hpp"
#include "config.hpp"

namespace cdlab::cli {

// Everything the simulate command needs about one model instance.
struct SimModel {
  std::string name;
  cdcore::OdeProblem problem;
  std::vector<std::string> state_columns;
  std::vector<std::pair<std::string, ScalarFn>> quasi_integrals;
  ScalarFn hamiltonian;                      // may be empty
  std::vector<int> angle_coords;
  std::vector<analysis::LoopSpec> loops;     // loop integrals reported on detected cycles
  std::function<Vec(std::mt19937_64&)> sample;
};

std::vector<std::string> simulate_model_names();

// Reads and validates the "params" section for the model; kappa is the dissipative constant
// (Kahler models use epsilon = kappa / 2). model_seed drives random model data such as matrices.
SimModel build_model(const std::string& name, const Section& params, double kappa, std::uint64_t model_seed);

}  // namespace cdlab::cli
