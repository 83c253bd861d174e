#pragma once

// Umbrella header: the whole library.

#include "liehom/grid.hpp"
