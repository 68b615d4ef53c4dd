#pragma once

// Umbrella header.

#include "kalvar/buchberger.hpp"
#include "kalvar/combinatorics.hpp"
#include "kalvar/degrees.hpp"
#include "kalvar/division.hpp"
#include "kalvar/gb2.hpp"
#include "kalvar/gfp.hpp"
#include "kalvar/json_io.hpp"
#include "kalvar/kalman.hpp"
#include "kalvar/linalg.hpp"
#include "kalvar/matrix.hpp"
#include "kalvar/membership.hpp"
#include "kalvar/monomial.hpp"
#include "kalvar/monomial_ideal.hpp"
#include "kalvar/partition.hpp"
#include "kalvar/poly.hpp"
#include "kalvar/rational.hpp"
#include "kalvar/rng.hpp"
#include "kalvar/schur.hpp"
#include "kalvar/subspaces.hpp"
#include "kalvar/symseries.hpp"
#include "kalvar/unipoly.hpp"
#include "kalvar/varid.hpp"
#include "kalvar/witness.hpp"
