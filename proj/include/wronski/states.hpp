#pragma once

// Pöschl–Teller eigenstates and the three families of seed solutions.
//
//   U(x; g, h) = g(g-1)/sin²x + h(h-1)/cos²x - (g+h)²
//
//   N_n   = (sin x)^g     (cos x)^h     P_n^(g-1/2, h-1/2)(η)   E = 4n(n+g+h)
//   I_v   = (sin x)^g     (cos x)^(1-h) P_v^(g-1/2, 1/2-h)(η)   E = -4(g+v+1/2)(h-v-1/2)
//   II_v  = (sin x)^(1-g) (cos x)^h     P_v^(1/2-g, h-1/2)(η)   E = -4(g-v-1/2)(h+v+1/2)
//   III_v = (sin x)^(1-g) (cos x)^(1-h) P_v^(1/2-g, 1/2-h)(η)   E = -4(v+1)(g+h-v-1)

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "wronski/param_poly.hpp"
#include "wronski/quasi.hpp"

namespace wronski {

enum class StateType { I, II, III, N };

inline constexpr std::array<StateType, 4> kAllStateTypes{StateType::I, StateType::II,
                                                        StateType::III, StateType::N};

std::string_view to_string(StateType t);

struct State {
  StateType type = StateType::N;
  int index = 0;

  auto operator<=>(const State&) const = default;
  std::string to_string() const;  // "I1", "N0", ...
  std::string to_latex() const;   // "\tilde{\phi}^{\mathrm{I}}_{1}", "\phi_{0}"
};

/// Ordered list of distinct states; the order fixes the Wronskian's sign.
class StateTuple {
 public:
  StateTuple() = default;
  /// Throws InvalidTuple on duplicates or negative indices.
  explicit StateTuple(std::vector<State> states);

  /// Grammar: comma-separated TYPE+index, TYPE ∈ {I, II, III, N}; "" is the
  /// empty tuple. Throws ParseError on malformed text, InvalidTuple on
  /// duplicates.
  static StateTuple parse(std::string_view spec);

  const std::vector<State>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const State& operator[](std::size_t i) const { return states_[i]; }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  bool contains(const State& s) const;
  /// Increasing indices of the given type.
  std::vector<int> indices(StateType t) const;
  StateTuple without(std::size_t position) const;
  StateTuple with_appended(const State& s) const;
  StateTuple with_prepended(const State& s) const;
  /// Sorted by type (I, II, III, N) then index.
  StateTuple sorted() const;

  bool operator==(const StateTuple&) const = default;
  std::string to_string() const;  // "I1,II2,III1"
  std::string to_latex() const;

 private:
  std::vector<State> states_;
};

/// base (base+1) ... (base+k-1); 1 for k = 0.
ParamPoly pochhammer(const ParamPoly& base, int k);

/// Jacobi polynomial P_n^(alpha, beta)(η) with ParamPoly coefficients:
///   Σ_k (-1)^k (alpha+k+1)_(n-k) (n+alpha+beta+1)_k / ((n-k)! k!) ((1-η)/2)^k
EtaPoly jacobi_poly(int n, const ParamPoly& alpha, const ParamPoly& beta);

/// The state as a canonical quasi-polynomial in symbolic (g, h).
QuasiPoly make_state(const State& s);

/// E_n = 4n(n+g+h); also used at negative n for the deleted-seed levels.
ParamPoly energy(long n);

ParamPoly eigenvalue(const State& s);

/// U(x; g, h) as a quasi-rational function of η.
QuasiRat potential();

/// (J, J') = 1 if J = J', -1 if {J, J'} = {I, II} or {III, N}, else 0.
int pairing(StateType j, StateType jp);

/// Parameter shift attached to prepending the ground member of a family:
/// I: (+1,-1), II: (-1,+1), III: (-1,-1), N: (+1,+1).
std::pair<long, long> ground_shift(StateType t);

}  // namespace wronski
