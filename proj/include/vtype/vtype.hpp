#pragma once

#include "vtype/types.hpp"
#include "vtype/analytic_dynamics.hpp"
#include "vtype/measurement.hpp"
#include "vtype/entanglement.hpp"
#include "vtype/oracle.hpp"
#include "vtype/scenario.hpp"
#include "vtype/sweep.hpp"
