#pragma once

/* Umbrella header: exact Hilbert series for loop space homology, rational
 * homotopy ranks, and the fibration-pullback connected-sum verifier. */

#include "loopq/error.hpp"
#include "loopq/loop.hpp"
#include "loopq/parse.hpp"
#include "loopq/ranks.hpp"
#include "loopq/scenario.hpp"
#include "loopq/semantics.hpp"
#include "loopq/series.hpp"
#include "loopq/space.hpp"
#include "loopq/verifier.hpp"
