#pragma once

// Similarity/dissimilarity measures as first-class values: codomain
// intervals, transitivity operators, equivalence and duality transforms,
// and brute-force verification of the defining properties over finite
// sampled domains.

#include "simdis/catalog.hpp"
#include "simdis/grid.hpp"
#include "simdis/interval.hpp"
#include "simdis/measure.hpp"
#include "simdis/operators.hpp"
#include "simdis/report.hpp"
#include "simdis/scalar_map.hpp"
#include "simdis/transforms.hpp"
#include "simdis/treedis.hpp"
#include "simdis/verifier.hpp"
