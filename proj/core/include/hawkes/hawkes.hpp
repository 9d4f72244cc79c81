#pragma once

#include "hawkes/errors.hpp"
#include "hawkes/exact.hpp"
#include "hawkes/kernels.hpp"
#include "hawkes/monte_carlo.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/schemes.hpp"
#include "hawkes/specfun.hpp"
#include "hawkes/stats.hpp"
