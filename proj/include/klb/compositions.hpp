#pragma once

// OR-composition algorithms for U-CSP(width) and 3SAT(backdoor size).

#include "klb/compositions/compose_backdoor.hpp"
#include "klb/compositions/compose_csp.hpp"
