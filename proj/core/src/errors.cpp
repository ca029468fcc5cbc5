#include "cdlab/errors.hpp"

namespace cdlab {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::MetricDegenerate: return "MetricDegenerate";
    case Errc::StepUnderflow: return "StepUnderflow";
    case Errc::NonFinite: return "NonFinite";
    case Errc::SingularityPersistent: return "SingularityPersistent";
    case Errc::ZeroBracket: return "ZeroBracket";
    case Errc::QVanishes: return "QVanishes";
    case Errc::QuadratureDiverges: return "QuadratureDiverges";
    case Errc::ResolventZero: return "ResolventZero";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SingularJacobian: return "SingularJacobian";
    case Errc::LeftDomain: return "LeftDomain";
    case Errc::DegenerateLevel: return "DegenerateLevel";
    case Errc::NoSuchLevel: return "NoSuchLevel";
    case Errc::DegeneratePair: return "DegeneratePair";
    case Errc::BadIndexSet: return "BadIndexSet";
    case Errc::TailOverflow: return "TailOverflow";
    case Errc::NoRoot: return "NoRoot";
    case Errc::ZeroSpinor: return "ZeroSpinor";
    case Errc::NotConverged: return "NotConverged";
    case Errc::NoRecurrence: return "NoRecurrence";
    case Errc::OpenLoop: return "OpenLoop";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::BranchJump: return "BranchJump";
    case Errc::NoLimit: return "NoLimit";
    case Errc::NoSolution: return "NoSolution";
    case Errc::SurfaceReached: return "SurfaceReached";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cdlab
