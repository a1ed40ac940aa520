#include "wronski/states.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wronski/errors.hpp"

namespace wronski {

std::string_view to_string(StateType t) {
  switch (t) {
    case StateType::I: return "I";
    case StateType::II: return "II";
    case StateType::III: return "III";
    case StateType::N: return "N";
  }
  return "?";
}

std::string State::to_string() const {
  return std::string(wronski::to_string(type)) + std::to_string(index);
}

std::string State::to_latex() const {
  if (type == StateType::N) return "\\phi_{" + std::to_string(index) + "}";
  return "\\tilde{\\phi}^{\\mathrm{" + std::string(wronski::to_string(type)) + "}}_{" +
         std::to_string(index) + "}";
}

StateTuple::StateTuple(std::vector<State> states) : states_(std::move(states)) {
  std::set<State> seen;
  for (const auto& s : states_) {
    if (s.index < 0) throw InvalidTuple("negative state index: " + s.to_string());
    if (!seen.insert(s).second) throw InvalidTuple("states must be distinct: " + s.to_string());
  }
}

StateTuple StateTuple::parse(std::string_view spec) {
  std::vector<State> out;
  std::size_t pos = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trimmed(spec).empty()) return {};
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string_view item =
        trimmed(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::size_t split = 0;
    while (split < item.size() && std::isalpha(static_cast<unsigned char>(item[split]))) ++split;
    const std::string_view tag = item.substr(0, split);
    const std::string_view digits = item.substr(split);
    State s;
    if (tag == "I") s.type = StateType::I;
    else if (tag == "II") s.type = StateType::II;
    else if (tag == "III") s.type = StateType::III;
    else if (tag == "N") s.type = StateType::N;
    else throw ParseError("bad state '" + std::string(item) + "': type must be I, II, III or N");
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad state '" + std::string(item) + "': index must be a decimal >= 0");
    }
    s.index = std::stoi(std::string(digits));
    out.push_back(s);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return StateTuple(std::move(out));
}

bool StateTuple::contains(const State& s) const {
  return std::find(states_.begin(), states_.end(), s) != states_.end();
}

std::vector<int> StateTuple::indices(StateType t) const {
  std::vector<int> out;
  for (const auto& s : states_) {
    if (s.type == t) out.push_back(s.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StateTuple StateTuple::without(std::size_t position) const {
  std::vector<State> out(states_);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(position));
  return StateTuple(std::move(out));
}

StateTuple StateTuple::with_appended(const State& s) const {
  std::vector<State> out(states_);
  out.push_back(s);
  return StateTuple(std::move(out));
}

StateTuple StateTuple::with_prepended(const State& s) const {
  std::vector<State> out{s};
  out.insert(out.end(), states_.begin(), states_.end());
  return StateTuple(std::move(out));
}

StateTuple StateTuple::sorted() const {
  std::vector<State> out(states_);
  std::sort(out.begin(), out.end());
  return StateTuple(std::move(out));
}

std::string StateTuple::to_string() const {
  std::string out;
  for (const auto& s : states_) {
    if (!out.empty()) out += ",";
    out += s.to_string();
  }
  return out;
}

std::string StateTuple::to_latex() const {
  std::string out = "\\mathrm{W}[";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (i > 0) out += ", ";
    out += states_[i].to_latex();
  }
  return out + "]";
}

ParamPoly pochhammer(const ParamPoly& base, int k) {
  ParamPoly out(1);
  for (int i = 0; i < k; ++i) out *= base + ParamPoly(i);
  return out;
}

EtaPoly jacobi_poly(int n, const ParamPoly& alpha, const ParamPoly& beta) {
  const EtaPoly half_one_minus_eta = EtaPoly::one_minus_eta() * ParamRat(Rational(1, 2));
  EtaPoly result;
  EtaPoly basis(ParamRat(1));  // ((1-η)/2)^k
  Integer fact_k = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      basis *= half_one_minus_eta;
      fact_k *= k;
    }
    Integer fact_nk;
    mpz_fac_ui(fact_nk.get_mpz_t(), static_cast<unsigned long>(n - k));
    ParamPoly c = pochhammer(alpha + ParamPoly(k + 1), n - k) *
                  pochhammer(ParamPoly(n + 1) + alpha + beta, k);
    Rational scale(Integer(k % 2 == 0 ? 1 : -1), fact_nk * fact_k);
    scale.canonicalize();
    result += basis * ParamRat(c * scale);
  }
  return result;
}

namespace {

struct StateShape {
  AffineExp exp_sin;
  AffineExp exp_cos;
  ParamPoly alpha;
  ParamPoly beta;
};

StateShape shape_of(StateType t) {
  const ParamPoly g = ParamPoly::g();
  const ParamPoly h = ParamPoly::h();
  const Rational half(1, 2);
  const AffineExp eg{1, 0, 0}, eh{0, 1, 0};
  const AffineExp flip_g{-1, 0, 1}, flip_h{0, -1, 1};
  const ParamPoly a_plus = g - ParamPoly(half), a_minus = ParamPoly(half) - g;
  const ParamPoly b_plus = h - ParamPoly(half), b_minus = ParamPoly(half) - h;
  switch (t) {
    case StateType::N: return {eg, eh, a_plus, b_plus};
    case StateType::I: return {eg, flip_h, a_plus, b_minus};
    case StateType::II: return {flip_g, eh, a_minus, b_plus};
    case StateType::III: return {flip_g, flip_h, a_minus, b_minus};
  }
  return {};
}

}  // namespace

QuasiPoly make_state(const State& s) {
  StateShape sh = shape_of(s.type);
  return QuasiPoly(sh.exp_sin, sh.exp_cos, jacobi_poly(s.index, sh.alpha, sh.beta));
}

ParamPoly energy(long n) {
  return ParamPoly(4 * n) * (ParamPoly(n) + ParamPoly::g() + ParamPoly::h());
}

ParamPoly eigenvalue(const State& s) {
  const ParamPoly g = ParamPoly::g();
  const ParamPoly h = ParamPoly::h();
  const Rational v = s.index;
  const Rational half(1, 2);
  switch (s.type) {
    case StateType::N: return energy(s.index);
    case StateType::I: return ParamPoly(-4) * (g + ParamPoly(v + half)) * (h - ParamPoly(v + half));
    case StateType::II: return ParamPoly(-4) * (g - ParamPoly(v + half)) * (h + ParamPoly(v + half));
    case StateType::III: return ParamPoly(-4) * ParamPoly(v + 1) * (g + h - ParamPoly(v + 1));
  }
  return {};
}

QuasiRat potential() {
  // g(g-1)·2/(1-η) + h(h-1)·2/(1+η) - (g+h)² over the common denominator 1-η².
  const ParamPoly g = ParamPoly::g();
  const ParamPoly h = ParamPoly::h();
  const ParamPoly gg = g * (g - ParamPoly(1)) * Rational(2);
  const ParamPoly hh = h * (h - ParamPoly(1)) * Rational(2);
  const ParamPoly s = (g + h) * (g + h);
  const EtaPoly num = EtaPoly::one_plus_eta() * ParamRat(gg) +
                      EtaPoly::one_minus_eta() * ParamRat(hh) -
                      EtaPoly::one_minus_eta() * EtaPoly::one_plus_eta() * ParamRat(s);
  return QuasiRat(AffineExp{}, AffineExp{}, num,
                  EtaPoly::one_minus_eta() * EtaPoly::one_plus_eta());
}

int pairing(StateType j, StateType jp) {
  if (j == jp) return 1;
  auto is_pair = [&](StateType a, StateType b) {
    return (j == a && jp == b) || (j == b && jp == a);
  };
  if (is_pair(StateType::I, StateType::II) || is_pair(StateType::III, StateType::N)) return -1;
  return 0;
}

std::pair<long, long> ground_shift(StateType t) {
  switch (t) {
    case StateType::I: return {1, -1};
    case StateType::II: return {-1, 1};
    case StateType::III: return {-1, -1};
    case StateType::N: return {1, 1};
  }
  return {0, 0};
}

}  // namespace wronski
