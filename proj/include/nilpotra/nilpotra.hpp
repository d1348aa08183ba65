/// @file nilpotra.hpp
/// @brief Umbrella header for the whole library.

#pragma once

#include "common.hpp"       // IWYU pragma: export
#include "context.hpp"      // IWYU pragma: export
#include "element.hpp"      // IWYU pragma: export
#include "hall.hpp"         // IWYU pragma: export
#include "lemma_lab.hpp"    // IWYU pragma: export
#include "morphism.hpp"     // IWYU pragma: export
#include "random.hpp"       // IWYU pragma: export
#include "series.hpp"       // IWYU pragma: export
#include "shift.hpp"        // IWYU pragma: export
#include "unitriangular.hpp"  // IWYU pragma: export
#include "word.hpp"         // IWYU pragma: export
