#pragma once
#include <cmath>
#include <numbers>

#include "doctest.h"

// Test cases tagged with this suite exercise claims the implementation reproduces faithfully but
// which do not hold numerically; they run as a separate ctest entry.
#define UNATTAINABLE_SUITE "unattainable"

inline constexpr double kPi = std::numbers::pi;
