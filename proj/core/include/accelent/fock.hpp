#pragma once

// Occupation-number state algebra: layouts, kets, density matrices.
#include "accelent/density.hpp"
#include "accelent/ket.hpp"
#include "accelent/layout.hpp"
#include "accelent/linalg.hpp"
