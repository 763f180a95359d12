#pragma once

// Umbrella header: exact enumeration of rooted and unrooted orientable
// maps by genus, edges and vertices.

#include "mapcount/bench.hpp"
#include "mapcount/edge_table.hpp"
#include "mapcount/edge_vertex_table.hpp"
#include "mapcount/genus_series.hpp"
#include "mapcount/integer.hpp"
#include "mapcount/io.hpp"
#include "mapcount/orbifold.hpp"
#include "mapcount/unrooted.hpp"
