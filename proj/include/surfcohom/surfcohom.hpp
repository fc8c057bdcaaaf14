#pragma once

#include "surfcohom/bigint.hpp"
#include "surfcohom/coefficients.hpp"
#include "surfcohom/cohomology.hpp"
#include "surfcohom/diagonal.hpp"
#include "surfcohom/errors.hpp"
#include "surfcohom/group_ring.hpp"
#include "surfcohom/int_matrix.hpp"
#include "surfcohom/presentation.hpp"
#include "surfcohom/resolution.hpp"
#include "surfcohom/smith.hpp"
#include "surfcohom/verify.hpp"
