#pragma once

#include "spinflux/analysis.hpp"
#include "spinflux/couplings.hpp"
#include "spinflux/error.hpp"
#include "spinflux/fluxnoise.hpp"
#include "spinflux/homogeneous.hpp"
#include "spinflux/io.hpp"
#include "spinflux/lattice.hpp"
#include "spinflux/rng.hpp"
#include "spinflux/spectral.hpp"
