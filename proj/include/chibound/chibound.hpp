#pragma once

// Umbrella header. json_io.hpp is not included here; it needs nlohmann/json.

#include "clique.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "corpus.hpp"
#include "edge_list.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "invariants.hpp"
#include "matching.hpp"
#include "operations.hpp"
#include "patterns.hpp"
#include "structure.hpp"
#include "vertex_set.hpp"
