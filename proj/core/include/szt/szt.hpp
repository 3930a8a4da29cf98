#pragma once

// Umbrella header pulling in the whole public surface.

#include "szt/arrangement.hpp"
#include "szt/bipoly.hpp"
#include "szt/invariants.hpp"
#include "szt/inverse_basis.hpp"
#include "szt/io.hpp"
#include "szt/linalg.hpp"
#include "szt/matroid.hpp"
#include "szt/perp.hpp"
#include "szt/rational.hpp"
#include "szt/superspace.hpp"
