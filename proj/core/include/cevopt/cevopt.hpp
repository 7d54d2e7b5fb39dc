#pragma once

#include "cevopt/barycentric.hpp"
#include "cevopt/cubic.hpp"
#include "cevopt/determinant.hpp"
#include "cevopt/geometry.hpp"
#include "cevopt/nelder_mead.hpp"
#include "cevopt/optimum.hpp"
#include "cevopt/oracle.hpp"
#include "cevopt/parallel.hpp"
#include "cevopt/rational_search.hpp"
#include "cevopt/rng.hpp"
#include "cevopt/scalar.hpp"
#include "cevopt/simplex.hpp"
#include "cevopt/version.hpp"
