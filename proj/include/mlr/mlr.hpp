#pragma once

#include "mlr/decider.hpp"
#include "mlr/explorer.hpp"
#include "mlr/identities.hpp"
#include "mlr/rational.hpp"
#include "mlr/safe_model.hpp"
#include "mlr/torus_intervals.hpp"
