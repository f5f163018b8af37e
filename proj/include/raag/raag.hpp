#pragma once

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"
#include "raag/smith.hpp"
#include "raag/presentation.hpp"
#include "raag/group.hpp"
#include "raag/ac.hpp"
#include "raag/coalgebra.hpp"
#include "raag/recovery.hpp"
