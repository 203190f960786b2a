#pragma once

// Umbrella header for the whole library.

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"
#include "arrexp/exponents.hpp"
#include "arrexp/intfactor.hpp"
#include "arrexp/json_io.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/padic.hpp"
#include "arrexp/polynomial.hpp"
#include "arrexp/qmatrix.hpp"
#include "arrexp/sweep.hpp"
#include "arrexp/symbolic.hpp"
#include "arrexp/theorems.hpp"
#include "arrexp/tuples.hpp"
#include "arrexp/wronskian.hpp"
#include "arrexp/wy_matrix.hpp"
