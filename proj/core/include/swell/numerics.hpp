#pragma once

#include "swell/grid.hpp"
#include "swell/histogram.hpp"
#include "swell/quadrature.hpp"
#include "swell/random.hpp"
