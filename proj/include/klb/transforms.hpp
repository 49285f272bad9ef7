#pragma once

// Polynomial parameter transformations out of SAT parameterized by the
// number of variables, and the 3SAT(vars) kernel.

#include "klb/transforms/encode_global.hpp"
#include "klb/transforms/kernel_3sat.hpp"
#include "klb/transforms/ppt.hpp"
#include "klb/transforms/sat_to_bn.hpp"
#include "klb/transforms/sat_to_sme.hpp"
#include "klb/transforms/trivial_backdoor.hpp"
