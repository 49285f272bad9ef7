#pragma once

// Data model for the five problem families and their derived structures.

#include "klb/bayes_net.hpp"
#include "klb/cnf.hpp"
#include "klb/csp.hpp"
#include "klb/global_constraint.hpp"
#include "klb/graph.hpp"
#include "klb/logic_program.hpp"
