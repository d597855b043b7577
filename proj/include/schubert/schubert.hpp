// Umbrella header.
#pragma once

#include "schubert/alcove.hpp"
#include "schubert/coweight.hpp"
#include "schubert/global.hpp"
#include "schubert/json_io.hpp"
#include "schubert/lattice.hpp"
#include "schubert/minuscule.hpp"
#include "schubert/order.hpp"
#include "schubert/suites.hpp"
