#pragma once

// Umbrella header for the finite-ring spectral workbench.

#include "specwb/audit.hpp"
#include "specwb/claims.hpp"
#include "specwb/cn_criterion.hpp"
#include "specwb/common.hpp"
#include "specwb/corpus.hpp"
#include "specwb/dense.hpp"
#include "specwb/ideal.hpp"
#include "specwb/ring.hpp"
#include "specwb/topology.hpp"
