#pragma once

#include "sproutlab/conjectures.hpp"
#include "sproutlab/errors.hpp"
#include "sproutlab/formulas.hpp"
#include "sproutlab/graph.hpp"
#include "sproutlab/io.hpp"
#include "sproutlab/pattern.hpp"
#include "sproutlab/solvers.hpp"
#include "sproutlab/sprout.hpp"
