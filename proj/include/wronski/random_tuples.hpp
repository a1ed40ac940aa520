#pragma once

#include <random>

#include "wronski/params.hpp"
#include "wronski/states.hpp"

namespace wronski {

/// Distinct states, 0..max_size of them, indices in 0..max_index, in
/// random order.
StateTuple random_tuple(std::mt19937_64& rng, int max_size, int max_index, int min_size = 0);

/// Like random_tuple but with at least one state of the given type.
StateTuple random_tuple_with(std::mt19937_64& rng, StateType must, int max_size, int max_index);

/// A generic point with small numerators and denominators.
ParamPoint random_generic_point(std::mt19937_64& rng);

}  // namespace wronski
