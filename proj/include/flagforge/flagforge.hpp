#pragma once

#include "flagforge/analysis.hpp"
#include "flagforge/bounds.hpp"
#include "flagforge/error.hpp"
#include "flagforge/flag.hpp"
#include "flagforge/galois.hpp"
#include "flagforge/matrix.hpp"
#include "flagforge/random.hpp"
#include "flagforge/rank_metric.hpp"
#include "flagforge/selftest.hpp"
#include "flagforge/serialize.hpp"
#include "flagforge/subspace.hpp"
