// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_SOLVKIT_HPP
#define SOLVKIT_SOLVKIT_HPP

#include "solvkit/algebra.hpp"
#include "solvkit/elimination.hpp"
#include "solvkit/errors.hpp"
#include "solvkit/exponent.hpp"
#include "solvkit/fields.hpp"
#include "solvkit/groebner.hpp"
#include "solvkit/homs.hpp"
#include "solvkit/module_order.hpp"
#include "solvkit/order.hpp"
#include "solvkit/parse.hpp"
#include "solvkit/poly.hpp"
#include "solvkit/print.hpp"
#include "solvkit/session.hpp"

#endif  // SOLVKIT_SOLVKIT_HPP
