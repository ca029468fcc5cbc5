#pragma once
#include <random>
#include <string>
#include <vector>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::models {

// A system on the identity and contraction suites with a sampler of random points whose guard is >= 1e-2.
struct RegisteredSystem {
  cdcore::CdSystem sys;
  std::function<Vec(std::mt19937_64&)> sample;
};

std::vector<std::string> registered_names();
RegisteredSystem registered_system(const std::string& name, double kappa = 1.0, std::uint64_t model_seed = 7);
std::vector<RegisteredSystem> registered_systems(double kappa = 1.0, std::uint64_t model_seed = 7);

// Random Hermitian matrix with i.i.d. standard Gaussian entries, symmetrized.
CMat random_hermitian(int n, std::mt19937_64& rng);
// Complex vector with i.i.d. standard Gaussian real and imaginary parts.
CVec random_complex(int n, std::mt19937_64& rng);

}  // namespace cdlab::models
