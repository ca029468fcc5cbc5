#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "bundle.hpp"

namespace cdlab::cli {

// Runs a named verification suite; UnknownSuite for an unrecognised id.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace cdlab::cli
