#pragma once

// Umbrella header for the minimal-separator toolkit.

#include "families.hpp"      // IWYU pragma: export
#include "graph.hpp"         // IWYU pragma: export
#include "graph_io.hpp"      // IWYU pragma: export
#include "separators.hpp"    // IWYU pragma: export
#include "triangulation.hpp" // IWYU pragma: export
#include "version.hpp"       // IWYU pragma: export
#include "vertex_set.hpp"    // IWYU pragma: export
