#pragma once

#include "toric/errors.hpp"
#include "toric/lattice.hpp"
#include "toric/lp.hpp"
#include "toric/fan.hpp"
#include "toric/fan_io.hpp"
#include "toric/intersection.hpp"
#include "toric/mori.hpp"
#include "toric/birational.hpp"
#include "toric/analyzer.hpp"
#include "toric/ewald.hpp"
#include "toric/gallery.hpp"
