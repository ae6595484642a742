#pragma once

// Umbrella header for the ringplane library: the projective plane over the
// double numbers GF(q) x GF(q), its neighbour/distant structure, and the two
// reduction maps onto PG(2,q).

#include "ringplane/common.hpp"
#include "ringplane/gf.hpp"
#include "ringplane/hom.hpp"
#include "ringplane/io.hpp"
#include "ringplane/neighbour.hpp"
#include "ringplane/pg.hpp"
#include "ringplane/plane.hpp"
#include "ringplane/ring.hpp"
#include "ringplane/verify.hpp"
