#pragma once

#include "klb/io/bn_format.hpp"
#include "klb/io/certificate.hpp"
#include "klb/io/csp_format.hpp"
#include "klb/io/dimacs.hpp"
#include "klb/io/global_format.hpp"
#include "klb/io/lp_format.hpp"
#include "klb/io/pace.hpp"
#include "klb/io/text.hpp"
