#pragma once

// Exact counting of simply ramified covers of the punctured plane,
// cross-checked against Feynman-graph contour integrals.

#include "hurwitz_cx/cover_counts.hpp"
#include "hurwitz_cx/feynman_graph.hpp"
#include "hurwitz_cx/graph_integrals.hpp"
#include "hurwitz_cx/numbers.hpp"
#include "hurwitz_cx/partition_functions.hpp"
#include "hurwitz_cx/permutation.hpp"
#include "hurwitz_cx/work_bound.hpp"
