#pragma once

#include "twofield/dynamics.hpp"
#include "twofield/error.hpp"
#include "twofield/fock.hpp"
#include "twofield/hamiltonians.hpp"
#include "twofield/observables.hpp"
#include "twofield/params.hpp"
#include "twofield/poisson.hpp"
#include "twofield/time_series.hpp"
#include "twofield/types.hpp"
