#pragma once

#include "spx/arith.hpp"
#include "spx/blocks.hpp"
#include "spx/brauer.hpp"
#include "spx/errors.hpp"
#include "spx/fp_linalg.hpp"
#include "spx/hooks.hpp"
#include "spx/module_rep.hpp"
#include "spx/partition.hpp"
#include "spx/perm_group.hpp"
#include "spx/permutation.hpp"
#include "spx/specht.hpp"
#include "spx/tableau.hpp"
