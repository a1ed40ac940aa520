#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wronski/params.hpp"
#include "wronski/quasi.hpp"
#include "wronski/states.hpp"

namespace wronski {

/// U - 2 (log W[t])'' = U - 2 (W'' W - W'^2) / W^2. Symbolic in (g, h) when
/// `at` is absent.
QuasiRat deformed_potential(const StateTuple& t, const std::optional<ParamPoint>& at = std::nullopt);

/// -f'' + pot·f.
QuasiRat apply_hamiltonian(const QuasiRat& pot, const QuasiRat& f);

struct EigenCheck {
  bool holds = false;
  ParamPoly eigenvalue;          // symbolic in (g, h)
  std::optional<ParamPoint> at;  // empty when checked symbolically
  std::vector<std::string> warnings;
};

/// W[t, φ_n]/W[t] against the deformed Hamiltonian of t with E_n = 4n(n+g+h).
/// Runs at `at` when given, symbolically when |t| <= symbolic_limit, and at
/// the default point otherwise. Throws NonGenericParameters for an excluded
/// point and InvalidTuple if N_n is already in t.
EigenCheck verify_eigenfunction(const StateTuple& t, int n,
                                const std::optional<ParamPoint>& at = std::nullopt,
                                std::size_t symbolic_limit = 2);

struct ExtraEigenstate {
  QuasiRat function;    // W[t without t[ell]] / W[t]
  ParamPoly eigenvalue;  // E_(-m-1) = -4(m+1)(g+h-m-1)
};

/// Throws InvalidTuple unless t[ell] is a type-III state.
ExtraEigenstate extra_eigenstate(const StateTuple& t, std::size_t ell,
                                 const std::optional<ParamPoint>& at = std::nullopt);

/// Applies the deformed Hamiltonian of t to extra_eigenstate(t, ell).
EigenCheck verify_extra_eigenstate(const StateTuple& t, std::size_t ell,
                                   const std::optional<ParamPoint>& at = std::nullopt,
                                   std::size_t symbolic_limit = 2);

struct SpectrumLabel {
  enum class Kind { kBound, kExtra };
  Kind kind = Kind::kBound;
  int index = 0;  // n for E_n, m for E_(-m-1)
  ParamPoly eigenvalue;

  /// n for bound levels, -m-1 for extra ones.
  long level() const { return kind == Kind::kBound ? index : -index - 1; }
  std::string to_string() const;  // "E_0", "E_{-2}"
  bool operator==(const SpectrumLabel&) const = default;
};

/// Extra levels E_(-m-1) for each type-III index m, then E_n for
/// n in {0..up_to} minus the type-N indices, in increasing level order.
/// The list is what the construction permits, not a claim of completeness.
std::vector<SpectrumLabel> permitted_spectrum(const StateTuple& t, int up_to = 6);

/// True iff the instantiated Wronskian polynomial has no root with η in
/// (-1, 1). Throws NonGenericParameters for excluded (g, h).
bool check_nonsingular(const StateTuple& t, const ParamPoint& at);

/// Warnings for g or h below 3/2 (the ground-state exponents), where the
/// construction is not claimed to give square-integrable results.
std::vector<std::string> parameter_warnings(const ParamPoint& at);

}  // namespace wronski
