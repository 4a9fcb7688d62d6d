#pragma once

// Umbrella header: exact Dedekind sums, their p-adic congruence laws, and
// constructive p-adic approximation witnesses.

#include "dedekind/approximator.hpp"
#include "dedekind/congruence_laws.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/families.hpp"
#include "dedekind/numtheory.hpp"
#include "dedekind/obstruction.hpp"
#include "dedekind/rational.hpp"
