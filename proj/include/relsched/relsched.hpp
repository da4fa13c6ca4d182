#pragma once

// Umbrella header: non-adaptive edge-relaxation schedules for single-source
// shortest paths, validity checking, the matching-family lower-bound
// machinery, and the APS hardness reduction.

#include "relsched/bench.hpp"
#include "relsched/engine.hpp"
#include "relsched/factorization.hpp"
#include "relsched/graph.hpp"
#include "relsched/io.hpp"
#include "relsched/rational.hpp"
#include "relsched/reduction.hpp"
#include "relsched/schedule.hpp"
#include "relsched/validity.hpp"
