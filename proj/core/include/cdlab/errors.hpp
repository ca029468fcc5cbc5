#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace cdlab {

enum class Errc {
  DegenerateForm,
  SingularPoint,
  MetricDegenerate,
  StepUnderflow,
  NonFinite,
  SingularityPersistent,
  ZeroBracket,
  QVanishes,
  QuadratureDiverges,
  ResolventZero,
  NoConvergence,
  SingularJacobian,
  LeftDomain,
  DegenerateLevel,
  NoSuchLevel,
  DegeneratePair,
  BadIndexSet,
  TailOverflow,
  NoRoot,
  ZeroSpinor,
  NotConverged,
  NoRecurrence,
  OpenLoop,
  InsufficientSamples,
  BranchJump,
  NoLimit,
  NoSolution,
  SurfaceReached,
  ConfigInvalid,
  UnknownSuite,
  BudgetExceeded,
  InvalidArgument,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cdlab
