#include "wronski/random_tuples.hpp"

#include <algorithm>

namespace wronski {

namespace {

State random_state(std::mt19937_64& rng, int max_index) {
  std::uniform_int_distribution<int> type(0, 3), index(0, max_index);
  return {kAllStateTypes[static_cast<std::size_t>(type(rng))], index(rng)};
}

}  // namespace

StateTuple random_tuple(std::mt19937_64& rng, int max_size, int max_index, int min_size) {
  const int size = std::uniform_int_distribution<int>(min_size, max_size)(rng);
  std::vector<State> states;
  while (static_cast<int>(states.size()) < size) {
    const State s = random_state(rng, max_index);
    if (std::find(states.begin(), states.end(), s) == states.end()) states.push_back(s);
  }
  return StateTuple(std::move(states));
}

StateTuple random_tuple_with(std::mt19937_64& rng, StateType must, int max_size, int max_index) {
  StateTuple t = random_tuple(rng, max_size - 1, max_index);
  for (;;) {
    const State s{must, std::uniform_int_distribution<int>(0, max_index)(rng)};
    if (!t.contains(s)) {
      const auto pos = std::uniform_int_distribution<std::size_t>(0, t.size())(rng);
      std::vector<State> states = t.states();
      states.insert(states.begin() + static_cast<std::ptrdiff_t>(pos), s);
      return StateTuple(std::move(states));
    }
  }
}

ParamPoint random_generic_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(11, 120), den(2, 13);
  for (;;) {
    ParamPoint p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    p.g.canonicalize();
    p.h.canonicalize();
    if (is_generic(p)) return p;
  }
}

}  // namespace wronski
