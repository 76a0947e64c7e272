#ifndef ITERROOT_ITERROOT_HPP
#define ITERROOT_ITERROOT_HPP

#include "iterroot/point_set.hpp"
#include "iterroot/ground_set.hpp"
#include "iterroot/multifunction.hpp"
#include "iterroot/paths.hpp"
#include "iterroot/criteria.hpp"
#include "iterroot/pullback.hpp"
#include "iterroot/fixed_point.hpp"
#include "iterroot/search.hpp"
#include "iterroot/poly.hpp"
#include "iterroot/instances.hpp"
#include "iterroot/mfn_format.hpp"
#include "iterroot/report.hpp"

#endif
