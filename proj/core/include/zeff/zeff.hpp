#pragma once

// Umbrella header.

#include "zeff/defaults.hpp"
#include "zeff/elimination.hpp"
#include "zeff/errors.hpp"
#include "zeff/field.hpp"
#include "zeff/impedance.hpp"
#include "zeff/netlist.hpp"
#include "zeff/network.hpp"
#include "zeff/polynomial.hpp"
#include "zeff/rational.hpp"
#include "zeff/rational_function.hpp"
#include "zeff/rng.hpp"
#include "zeff/roots.hpp"
#include "zeff/serialize.hpp"
#include "zeff/solver.hpp"
#include "zeff/verify.hpp"
