#pragma once

#include "latgraph/arith.hpp"
#include "latgraph/catalog.hpp"
#include "latgraph/census.hpp"
#include "latgraph/error.hpp"
#include "latgraph/graph.hpp"
#include "latgraph/group.hpp"
#include "latgraph/group_expr.hpp"
#include "latgraph/ids.hpp"
#include "latgraph/io.hpp"
#include "latgraph/iso.hpp"
#include "latgraph/lattice.hpp"
#include "latgraph/power_graphs.hpp"
#include "latgraph/reconstruct.hpp"
