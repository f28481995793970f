#pragma once

#include "hsub/bench.hpp"
#include "hsub/chromatic.hpp"
#include "hsub/dominance.hpp"
#include "hsub/edgemax.hpp"
#include "hsub/exact_sum.hpp"
#include "hsub/extmat.hpp"
#include "hsub/graph.hpp"
#include "hsub/market.hpp"
#include "hsub/oracle.hpp"
#include "hsub/parallel.hpp"
#include "hsub/rng.hpp"
#include "hsub/vertexmax.hpp"
#include "hsub/witness.hpp"
