#pragma once

#include "vecsim/config.hpp"
#include "vecsim/direction.hpp"
#include "vecsim/ensemble.hpp"
#include "vecsim/errors.hpp"
#include "vecsim/grid.hpp"
#include "vecsim/io.hpp"
#include "vecsim/morphology.hpp"
#include "vecsim/patterns.hpp"
#include "vecsim/rng.hpp"
#include "vecsim/simulator.hpp"
#include "vecsim/tvf.hpp"
#include "vecsim/version.hpp"
