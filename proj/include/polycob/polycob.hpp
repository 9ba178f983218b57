#pragma once

#include "polycob/errors.hpp"
#include "polycob/rational.hpp"
#include "polycob/lengths.hpp"
#include "polycob/admissible.hpp"
#include "polycob/cobordism.hpp"
#include "polycob/polygon.hpp"
#include "polycob/polytope5.hpp"
