#pragma once

#include "klb/compositions.hpp"
#include "klb/generate.hpp"
#include "klb/instances.hpp"
#include "klb/io.hpp"
#include "klb/solvers.hpp"
#include "klb/transforms.hpp"
#include "klb/verify.hpp"
