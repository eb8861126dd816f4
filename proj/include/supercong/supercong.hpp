#pragma once

#include "supercong/congruence.hpp"
#include "supercong/error.hpp"
#include "supercong/identities.hpp"
#include "supercong/padic.hpp"
#include "supercong/primes.hpp"
#include "supercong/rational.hpp"
#include "supercong/residue.hpp"
#include "supercong/sequences.hpp"
