#pragma once

#include "qtwist/errors.hpp"
#include "qtwist/rational.hpp"
#include "qtwist/polynomial.hpp"
#include "qtwist/ratfunc.hpp"
#include "qtwist/scalar.hpp"
#include "qtwist/matrix.hpp"
#include "qtwist/linalg.hpp"
#include "qtwist/tensor.hpp"
#include "qtwist/ncpoly.hpp"
#include "qtwist/quadratic.hpp"
#include "qtwist/frt.hpp"
#include "qtwist/twisting.hpp"
#include "qtwist/twist.hpp"
#include "qtwist/random.hpp"
#include "qtwist/io.hpp"
#include "qtwist/verify.hpp"
