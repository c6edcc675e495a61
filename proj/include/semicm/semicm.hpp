#pragma once

#include "buchsbaum.hpp"
#include "groebner.hpp"
#include "lifting.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "projective.hpp"
#include "semigroup.hpp"
#include "toric.hpp"
