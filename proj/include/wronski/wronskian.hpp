#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wronski/params.hpp"
#include "wronski/quasi.hpp"
#include "wronski/states.hpp"

namespace wronski {

using EtaMatrix = std::vector<std::vector<EtaPoly>>;

/// Division-free expansion by minors over column subsets, O(n 2^n) products.
EtaPoly determinant_by_minors(const EtaMatrix& m);

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact in Q[g, h][η].
EtaPoly determinant_bareiss(EtaMatrix m);

enum class DetMethod { kAuto, kMinors, kBareiss };

/// Polynomial parts Q_ij of d^i/dx^i f_j = (sin x)^(a_j - i) (cos x)^(b_j - i) Q_ij(η).
EtaMatrix wronskian_matrix(std::span<const QuasiPoly> columns);

/// W[f_1, ..., f_N] for arbitrary quasi-polynomials. The result is
///   (sin x)^(Σa_j - N(N-1)/2) (cos x)^(Σb_j - N(N-1)/2) det(Q_ij),
/// canonicalized. The empty Wronskian is 1. Throws ZeroPolynomial("zero
/// Wronskian") if the determinant vanishes identically.
QuasiPoly wronskian_of(std::span<const QuasiPoly> columns, DetMethod method = DetMethod::kAuto);

/// Symbolic in (g, h). Throws InvalidTuple("states must be distinct") via
/// the tuple invariant.
QuasiPoly wronskian(const StateTuple& t, DetMethod method = DetMethod::kAuto);

/// With (g, h) instantiated before differentiating; exponents are constants.
QuasiPoly wronskian(const StateTuple& t, const ParamPoint& at, DetMethod method = DetMethod::kAuto);

/// Substitutes (g, h) -> (g + dg, h + dh).
inline QuasiPoly shift_quasi(const QuasiPoly& q, long dg, long dh) { return q.shifted(dg, dh); }

/// W[base, f, g]·W[base] = W[W[base, f], W[base, g]], checked exactly at
/// the given instantiation (both sides computed independently).
bool wronskian_compose_check(const StateTuple& base, const State& f, const State& g,
                             const ParamPoint& at = default_generic_point());

}  // namespace wronski
