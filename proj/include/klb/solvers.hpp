#pragma once

// Brute-force oracles and fixed-parameter decision procedures.

#include "klb/solvers/bn.hpp"
#include "klb/solvers/csp.hpp"
#include "klb/solvers/global.hpp"
#include "klb/solvers/sat.hpp"
#include "klb/solvers/stable.hpp"
