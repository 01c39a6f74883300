#pragma once

// Umbrella header: volumes of homogeneity surfaces and their domains on the
// additive, multiplicative, and odds effect scales, plus the Wald
// acceptance-region volumes those geometries predict.

#include "homvol/estimate.hpp"
#include "homvol/geometry.hpp"
#include "homvol/inference.hpp"
#include "homvol/integrate.hpp"
#include "homvol/quadrature.hpp"
#include "homvol/records.hpp"
#include "homvol/rng.hpp"
#include "homvol/scales.hpp"
#include "homvol/version.hpp"
