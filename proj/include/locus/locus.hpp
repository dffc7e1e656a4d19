#pragma once

#include "locus/chain_complex.hpp"
#include "locus/coeff.hpp"
#include "locus/error.hpp"
#include "locus/groebner.hpp"
#include "locus/invariants.hpp"
#include "locus/localring.hpp"
#include "locus/matrix.hpp"
#include "locus/modules.hpp"
#include "locus/monomial.hpp"
#include "locus/poly.hpp"
#include "locus/prune.hpp"
