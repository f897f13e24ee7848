#ifndef SYMPD_SYMPD_HPP
#define SYMPD_SYMPD_HPP

#include "sympd/complex2.hpp"
#include "sympd/distances.hpp"
#include "sympd/domain.hpp"
#include "sympd/errors.hpp"
#include "sympd/interpolant.hpp"
#include "sympd/moebius.hpp"
#include "sympd/mu.hpp"
#include "sympd/oracles.hpp"
#include "sympd/polynomial.hpp"
#include "sympd/schwarz.hpp"
#include "sympd/serialization.hpp"

#endif
