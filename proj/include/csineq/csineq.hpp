#pragma once

// Umbrella header: exact scalars, carriers, decompositions, inequality
// checks, constructions, the search harness and the CLI runner.

#include "csineq/additive.hpp"
#include "csineq/carrier.hpp"
#include "csineq/checks.hpp"
#include "csineq/constructions.hpp"
#include "csineq/convergents.hpp"
#include "csineq/decomposition.hpp"
#include "csineq/enclosure.hpp"
#include "csineq/errors.hpp"
#include "csineq/function.hpp"
#include "csineq/gaussian.hpp"
#include "csineq/harness.hpp"
#include "csineq/interval.hpp"
#include "csineq/polynomial.hpp"
#include "csineq/quadratic.hpp"
#include "csineq/rational.hpp"
#include "csineq/report.hpp"
#include "csineq/runner.hpp"
#include "csineq/sampling.hpp"
#include "csineq/suites.hpp"
#include "csineq/version.hpp"
