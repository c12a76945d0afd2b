#pragma once

// Umbrella header.

#include "bimeasure/decomposition.hpp"
#include "bimeasure/dynamics.hpp"
#include "bimeasure/hyperbolic.hpp"
#include "bimeasure/integration.hpp"
#include "bimeasure/json_io.hpp"
#include "bimeasure/measure.hpp"
