#pragma once

// Umbrella header for the whole library.

#include "splitting.hpp"
#include "weights.hpp"
#include "cones.hpp"
#include "reduction.hpp"
#include "oracle.hpp"
#include "json_io.hpp"
