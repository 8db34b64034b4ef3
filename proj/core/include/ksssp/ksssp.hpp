#pragma once

#include "ksssp/closure.hpp"
#include "ksssp/generators.hpp"
#include "ksssp/graph.hpp"
#include "ksssp/graph_io.hpp"
#include "ksssp/oracle.hpp"
#include "ksssp/path.hpp"
#include "ksssp/profile.hpp"
#include "ksssp/ranked_queue.hpp"
#include "ksssp/shortest_paths.hpp"
#include "ksssp/solver_state.hpp"
#include "ksssp/solvers.hpp"
#include "ksssp/yen.hpp"
