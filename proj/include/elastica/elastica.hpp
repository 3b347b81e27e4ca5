#pragma once

// Umbrella header: energies of planar elastic curves and 3-networks, the
// explicit Figure-Eight elastica, closed-form competitor networks and the
// rescaling calculus of penalized functionals.

#include "elastica/competitors.hpp"
#include "elastica/curve.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/error.hpp"
#include "elastica/figure_eight.hpp"
#include "elastica/io.hpp"
#include "elastica/network.hpp"
#include "elastica/numerics.hpp"
#include "elastica/rescale.hpp"
#include "elastica/svg.hpp"
#include "elastica/vec2.hpp"
