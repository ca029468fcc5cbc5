#pragma once
#include <functional>

#include "cdlab/types.hpp"

namespace cdlab::lie {

struct SpectralData {
  Vec omega;  // ascending
  Vec rho;    // nonnegative, sum 1
  void validate(double tol = 1e-12) const;
};

// sum_j rho_j / (omega_j - omega + i eps)
cplx resolvent_discrete(const SpectralData& sd, double omega, double epsilon);

struct ResolventIntegralOptions {
  double rel_tol = 1e-10;
  int max_panels = 200000;
};
using Kernel = std::function<cplx(double)>;
// -i int_0^inf exp(-(i omega + eps) t) kernel(t) dt
cplx resolvent_integral(const Kernel& kernel, double omega, double epsilon,
                        const ResolventIntegralOptions& opts = {});

}  // namespace cdlab::lie
