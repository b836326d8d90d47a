#pragma once

// Everything in one include.

#include "twistlab/scalar.hpp"
#include "twistlab/intmat.hpp"
#include "twistlab/group.hpp"
#include "twistlab/subgroup.hpp"
#include "twistlab/cocycle.hpp"
#include "twistlab/oracle.hpp"
#include "twistlab/skew.hpp"
#include "twistlab/reduce.hpp"
#include "twistlab/field.hpp"
#include "twistlab/strata.hpp"
#include "twistlab/catalog.hpp"
#include "twistlab/json_io.hpp"
