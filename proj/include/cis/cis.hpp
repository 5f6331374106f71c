#pragma once

// Umbrella header for the whole library.

#include "cis/atlas.hpp"
#include "cis/canonical.hpp"
#include "cis/counting.hpp"
#include "cis/families.hpp"
#include "cis/formulas.hpp"
#include "cis/graph.hpp"
#include "cis/graph6.hpp"
#include "cis/scan.hpp"
#include "cis/types.hpp"
#include "cis/vertex_set.hpp"
