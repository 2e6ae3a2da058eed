#pragma once

#include "enriques/checked.hpp"
#include "enriques/collections.hpp"
#include "enriques/error.hpp"
#include "enriques/k3_cover.hpp"
#include "enriques/lattice.hpp"
#include "enriques/mukai.hpp"
#include "enriques/picard.hpp"
#include "enriques/polarization.hpp"
#include "enriques/reflection.hpp"
