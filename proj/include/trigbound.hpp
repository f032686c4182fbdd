#pragma once

#include "trigbound/algebraic_poly.hpp"
#include "trigbound/certify.hpp"
#include "trigbound/chebyshev.hpp"
#include "trigbound/conditions.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/extremal.hpp"
#include "trigbound/lp.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/sturm.hpp"
#include "trigbound/trig_poly.hpp"
#include "trigbound/zeta.hpp"
