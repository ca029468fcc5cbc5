#pragma once
#include "cdlab/errors.hpp"
#include "cdlab/types.hpp"
#include "cdlab/cdcore/system.hpp"
#include "cdlab/cdcore/field.hpp"
#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/cdcore/identities.hpp"
#include "cdlab/lie/resolvent.hpp"
#include "cdlab/lie/solver.hpp"
#include "cdlab/models/simple.hpp"
#include "cdlab/models/matrix.hpp"
#include "cdlab/models/fermion.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/particle.hpp"
#include "cdlab/models/spin.hpp"
#include "cdlab/models/lie_models.hpp"
#include "cdlab/models/registry.hpp"
#include "cdlab/analysis/cycle.hpp"
#include "cdlab/analysis/floquet.hpp"
#include "cdlab/analysis/retraction.hpp"
#include "cdlab/analysis/hamilton_jacobi.hpp"
#include "cdlab/relsym/lorentz.hpp"
#include "cdlab/relsym/cylinder.hpp"
