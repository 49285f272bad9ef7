#pragma once

// Structural validators for certificates and the oracle-equivalence harness.

#include "klb/verify/backdoor.hpp"
#include "klb/verify/harness.hpp"
#include "klb/verify/report.hpp"
#include "klb/verify/structure.hpp"
