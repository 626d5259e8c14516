#pragma once

#include "relnum/convergence.hpp"
#include "relnum/errors.hpp"
#include "relnum/farey.hpp"
#include "relnum/json_io.hpp"
#include "relnum/matrix.hpp"
#include "relnum/orbit.hpp"
#include "relnum/poly.hpp"
#include "relnum/poly_matrix.hpp"
#include "relnum/scalar.hpp"
#include "relnum/sturm.hpp"
#include "relnum/word.hpp"
