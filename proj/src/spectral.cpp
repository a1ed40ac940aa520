#include "wronski/spectral.hpp"

#include <algorithm>

#include "wronski/errors.hpp"
#include "wronski/maya.hpp"
#include "wronski/wronskian.hpp"

namespace wronski {

namespace {

QuasiPoly wronskian_at(const StateTuple& t, const std::optional<ParamPoint>& at) {
  return at ? wronskian(t, *at) : wronskian(t);
}

ParamRat eigenvalue_at(const ParamPoly& e, const std::optional<ParamPoint>& at) {
  return at ? ParamRat(e.evaluate(at->g, at->h)) : ParamRat(e);
}

std::optional<ParamPoint> choose_point(std::size_t size, const std::optional<ParamPoint>& at,
                                       std::size_t symbolic_limit) {
  if (at) {
    require_generic(*at);
    return at;
  }
  if (size <= symbolic_limit) return std::nullopt;
  return default_generic_point();
}

bool is_eigenfunction(const QuasiRat& pot, const QuasiRat& f, const ParamRat& e) {
  return (apply_hamiltonian(pot, f) - f.scaled(e)).is_zero();
}

// With V = U - 2 (log B)'', H(A/B) = E A/B is equivalent to
//   -A''B + 2A'B' - AB'' + (U - E)AB = 0,
// which stays polynomial. U s^2 c^2 and E s^2 c^2 are polynomials in η.
bool ratio_is_eigenfunction(const QuasiPoly& a, const QuasiPoly& b, const ParamPoly& e,
                            const std::optional<ParamPoint>& at) {
  const ParamPoly g = ParamPoly::g();
  const ParamPoly h = ParamPoly::h();
  const Rational half(1, 2), quarter(1, 4);
  const EtaPoly one_minus_sq = EtaPoly::one_minus_eta() * EtaPoly::one_plus_eta();
  EtaPoly u = EtaPoly::one_plus_eta() * ParamRat(g * (g - ParamPoly(1)) * half) +
              EtaPoly::one_minus_eta() * ParamRat(h * (h - ParamPoly(1)) * half) -
              one_minus_sq * ParamRat((g + h) * (g + h) * quarter + e * quarter);
  if (at) u = u.instantiate(at->g, at->h);
  const RawQuasi a1 = differentiate(a), a2 = differentiate(a1);
  const RawQuasi b1 = differentiate(b), b2 = differentiate(b1);
  const EtaPoly& pa = a.poly();
  const EtaPoly& pb = b.poly();
  const EtaPoly total = (a1.poly * b1.poly) * ParamRat(2) - a2.poly * pb - pa * b2.poly +
                        u * pa * pb;
  return total.is_zero();
}

}  // namespace

QuasiRat deformed_potential(const StateTuple& t, const std::optional<ParamPoint>& at) {
  if (at) require_generic(*at);
  const QuasiRat u = at ? potential().instantiate(*at) : potential();
  if (t.empty()) return u;
  const QuasiPoly w = wronskian_at(t, at);
  const RawQuasi w1 = differentiate(w);
  const RawQuasi w2 = differentiate(w1);
  // (W''W - W'^2)/W^2 = s^-2 c^-2 (Q2 P - Q1^2) / P^2
  const EtaPoly& p = w.poly();
  EtaPoly num = (w2.poly * p - w1.poly * w1.poly) * ParamRat(-2);
  const AffineExp minus_two = AffineExp::constant(-2);
  return u + QuasiRat(minus_two, minus_two, std::move(num), p * p);
}

QuasiRat apply_hamiltonian(const QuasiRat& pot, const QuasiRat& f) {
  return pot * f - differentiate(differentiate(f));
}

EigenCheck verify_eigenfunction(const StateTuple& t, int n, const std::optional<ParamPoint>& at,
                                std::size_t symbolic_limit) {
  const StateTuple extended = t.with_appended({StateType::N, n});
  EigenCheck r;
  r.at = choose_point(t.size(), at, symbolic_limit);
  r.eigenvalue = energy(n);
  if (r.at) r.warnings = parameter_warnings(*r.at);
  const QuasiPoly top = wronskian_at(extended, r.at);
  const QuasiPoly bottom = wronskian_at(t, r.at);
  if (r.at) {
    r.holds = is_eigenfunction(deformed_potential(t, r.at), QuasiRat(top) / QuasiRat(bottom),
                               eigenvalue_at(r.eigenvalue, r.at));
  } else {
    r.holds = ratio_is_eigenfunction(top, bottom, r.eigenvalue, std::nullopt);
  }
  return r;
}

ExtraEigenstate extra_eigenstate(const StateTuple& t, std::size_t ell,
                                 const std::optional<ParamPoint>& at) {
  if (ell >= t.size()) throw InvalidTuple("state position out of range");
  const State& s = t[ell];
  if (s.type != StateType::III) {
    throw InvalidTuple("deleted state must be of type III, got " + s.to_string());
  }
  if (at) require_generic(*at);
  ExtraEigenstate r;
  r.function = QuasiRat(wronskian_at(t.without(ell), at)) / QuasiRat(wronskian_at(t, at));
  r.eigenvalue = energy(-static_cast<long>(s.index) - 1);
  return r;
}

EigenCheck verify_extra_eigenstate(const StateTuple& t, std::size_t ell,
                                   const std::optional<ParamPoint>& at,
                                   std::size_t symbolic_limit) {
  EigenCheck r;
  r.at = choose_point(t.size(), at, symbolic_limit);
  if (r.at) r.warnings = parameter_warnings(*r.at);
  if (r.at) {
    const ExtraEigenstate e = extra_eigenstate(t, ell, r.at);
    r.eigenvalue = e.eigenvalue;
    r.holds = is_eigenfunction(deformed_potential(t, r.at), e.function,
                               eigenvalue_at(r.eigenvalue, r.at));
  } else {
    if (ell >= t.size() || t[ell].type != StateType::III) extra_eigenstate(t, ell);  // throws
    r.eigenvalue = energy(-static_cast<long>(t[ell].index) - 1);
    r.holds = ratio_is_eigenfunction(t.size() == 1 ? QuasiPoly() : wronskian(t.without(ell)),
                                     wronskian(t), r.eigenvalue, std::nullopt);
  }
  return r;
}

std::string SpectrumLabel::to_string() const {
  const long l = level();
  return l < 0 ? "E_{" + std::to_string(l) + "}" : "E_" + std::to_string(l);
}

std::vector<SpectrumLabel> permitted_spectrum(const StateTuple& t, int up_to) {
  const DiagramPair d = tuple_to_diagrams(t);
  std::vector<SpectrumLabel> out;
  for (auto it = d.first.left_white.rbegin(); it != d.first.left_white.rend(); ++it) {
    out.push_back({SpectrumLabel::Kind::kExtra, *it, energy(-static_cast<long>(*it) - 1)});
  }
  const auto& deleted = d.first.right_black;
  for (int n = 0; n <= up_to; ++n) {
    if (std::binary_search(deleted.begin(), deleted.end(), n)) continue;
    out.push_back({SpectrumLabel::Kind::kBound, n, energy(n)});
  }
  return out;
}

bool check_nonsingular(const StateTuple& t, const ParamPoint& at) {
  require_generic(at);
  return sturm_count(wronskian(t, at).poly(), Rational(-1), Rational(1)) == 0;
}

std::vector<std::string> parameter_warnings(const ParamPoint& at) {
  std::vector<std::string> out;
  const Rational threshold(3, 2);
  if (at.g < threshold) out.push_back("g = " + to_display_string(at.g) + " is below 3/2");
  if (at.h < threshold) out.push_back("h = " + to_display_string(at.h) + " is below 3/2");
  return out;
}

}  // namespace wronski
