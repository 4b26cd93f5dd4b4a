#ifndef SUBORD_SUBORD_HPP
#define SUBORD_SUBORD_HPP

#include "subord/analytic_engine.hpp"
#include "subord/analytic_map.hpp"
#include "subord/bounds.hpp"
#include "subord/core_maps.hpp"
#include "subord/errors.hpp"
#include "subord/extremal_k1.hpp"
#include "subord/tolerances.hpp"
#include "subord/two_value/candidate.hpp"
#include "subord/two_value/discriminant.hpp"
#include "subord/two_value/feasibility.hpp"

#endif // SUBORD_SUBORD_HPP
