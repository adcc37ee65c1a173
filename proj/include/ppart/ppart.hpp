#pragma once

// Umbrella header for the whole library.

#include "ppart/census.hpp"
#include "ppart/errors.hpp"
#include "ppart/gamma.hpp"
#include "ppart/hilbert.hpp"
#include "ppart/ideals.hpp"
#include "ppart/poset.hpp"
#include "ppart/presentation.hpp"
#include "ppart/recognizer.hpp"
#include "ppart/subset.hpp"
