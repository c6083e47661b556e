#pragma once

#include "aao/ising/distribution.hpp"
#include "aao/ising/engine.hpp"
#include "aao/ising/spin_graph.hpp"
#include "aao/ising/types.hpp"
