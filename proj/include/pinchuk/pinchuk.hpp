#pragma once

// Umbrella header: the exact-arithmetic kernels, root isolation,
// elimination, the map itself, fiber analysis, and rendering.  The CLI
// front end lives in cli.hpp and is not pulled in here because it drags in
// the vendored argument-parser and JSON headers.

#include "rational.hpp"
#include "interval.hpp"
#include "errors.hpp"
#include "multipoly.hpp"
#include "poly_parse.hpp"
#include "unipoly.hpp"
#include "elimination.hpp"
#include "sturm.hpp"
#include "system.hpp"
#include "curve.hpp"
#include "fiber.hpp"
#include "render.hpp"
