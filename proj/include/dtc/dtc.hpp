#pragma once

#include "dtc/complex.hpp"
#include "dtc/error.hpp"
#include "dtc/gen.hpp"
#include "dtc/graph.hpp"
#include "dtc/homology.hpp"
#include "dtc/io.hpp"
#include "dtc/shelling.hpp"
#include "dtc/skeleton_shelling.hpp"
#include "dtc/source_shelling.hpp"
#include "dtc/tree_shelling.hpp"
