#pragma once

// Convenience include for the whole library. relfree/io.hpp is not pulled in
// here because it needs nlohmann/json on the include path; include it
// directly where JSON parsing is wanted.

#include "relfree/action.hpp"
#include "relfree/errors.hpp"
#include "relfree/finite_generation.hpp"
#include "relfree/group.hpp"
#include "relfree/invariants.hpp"
#include "relfree/lalgebra.hpp"
#include "relfree/linalg.hpp"
#include "relfree/matrix.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/partition.hpp"
#include "relfree/polyalg.hpp"
#include "relfree/power_series.hpp"
#include "relfree/rational.hpp"
#include "relfree/schur.hpp"
#include "relfree/symm_series.hpp"
#include "relfree/weitzenbock.hpp"
