#pragma once

#include "pcg_paradox/error.hpp"
#include "pcg_paradox/numeric.hpp"
#include "pcg_paradox/pcg.hpp"
#include "pcg_paradox/gf2.hpp"
#include "pcg_paradox/state.hpp"
#include "pcg_paradox/simulate.hpp"
#include "pcg_paradox/density.hpp"
#include "pcg_paradox/sampling.hpp"
#include "pcg_paradox/magic_square.hpp"
#include "pcg_paradox/recipe.hpp"
#include "pcg_paradox/paradox.hpp"
#include "pcg_paradox/io.hpp"
