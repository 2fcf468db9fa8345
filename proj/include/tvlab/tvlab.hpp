#ifndef TVLAB_TVLAB_HPP
#define TVLAB_TVLAB_HPP

#include "tvlab/comb.hpp"
#include "tvlab/convex.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/io.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/linalg.hpp"
#include "tvlab/parallel.hpp"
#include "tvlab/predicates.hpp"
#include "tvlab/rational.hpp"
#include "tvlab/reports.hpp"
#include "tvlab/rng.hpp"
#include "tvlab/sequences.hpp"
#include "tvlab/stair.hpp"
#include "tvlab/statements.hpp"
#include "tvlab/stretched.hpp"
#include "tvlab/types.hpp"
#include "tvlab/version.hpp"

#endif
