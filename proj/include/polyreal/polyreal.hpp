#pragma once

#include "error.hpp"
#include "root_data.hpp"
#include "lattice_crystal.hpp"
#include "forms.hpp"
#include "eyd.hpp"
#include "reyd.hpp"
#include "young_wall.hpp"
#include "generators.hpp"
#include "verify.hpp"
