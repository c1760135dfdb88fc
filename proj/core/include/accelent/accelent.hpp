#pragma once

#include "accelent/bogoliubov.hpp"
#include "accelent/entanglement.hpp"
#include "accelent/errors.hpp"
#include "accelent/fock.hpp"
#include "accelent/report.hpp"
#include "accelent/states.hpp"
#include "accelent/sweep.hpp"
