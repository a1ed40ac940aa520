#include "wronski/maya.hpp"

#include <algorithm>
#include <cctype>

#include "wronski/errors.hpp"
#include "wronski/wronskian.hpp"

namespace wronski {

std::string Ledger::to_string() const {
  return "(" + std::to_string(dg) + ", " + std::to_string(dh) + ", " + pref_sin.to_string() +
         ", " + pref_cos.to_string() + ")";
}

std::string_view to_string(ReductionTarget t) {
  switch (t) {
    case ReductionTarget::kIN: return "I,N";
    case ReductionTarget::kIIII: return "I,III";
    case ReductionTarget::kIIN: return "II,N";
    case ReductionTarget::kIIIII: return "II,III";
  }
  return "?";
}

ReductionTarget parse_target(std::string_view s) {
  std::string key;
  for (char c : s) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (ReductionTarget t : kAllTargets) {
    if (key == to_string(t)) return t;
  }
  throw ParseError("bad reduction target '" + std::string(s) +
                   "': expected I,N | I,III | II,N | II,III");
}

DiagramPair tuple_to_diagrams(const StateTuple& t) {
  DiagramPair d;
  d.first.left_white = t.indices(StateType::III);
  d.first.right_black = t.indices(StateType::N);
  d.second.left_white = t.indices(StateType::II);
  d.second.right_black = t.indices(StateType::I);
  return d;
}

StateTuple diagrams_to_tuple(const DiagramPair& d) {
  std::vector<State> out;
  auto add = [&](StateType type, const std::vector<int>& idx) {
    for (int i : idx) out.push_back({type, i});
  };
  add(StateType::I, d.second.right_black);
  add(StateType::II, d.second.left_white);
  add(StateType::III, d.first.left_white);
  add(StateType::N, d.first.right_black);
  return StateTuple(std::move(out));
}

namespace {

// The bead next to the division crosses to the other side. Left-side
// positions shrink by one and right-side positions grow by one (or the
// reverse for a right move).
void shift_beads(MayaDiagram& m, Direction dir) {
  std::vector<int>& from = dir == Direction::kLeft ? m.left_white : m.right_black;
  std::vector<int>& to = dir == Direction::kLeft ? m.right_black : m.left_white;
  const bool crossing_is_default = !from.empty() && from.front() == 0;
  if (crossing_is_default) from.erase(from.begin());
  for (int& d : from) --d;
  for (int& d : to) ++d;
  if (!crossing_is_default) to.insert(to.begin(), 0);
  m.offset += dir == Direction::kLeft ? -1 : 1;
}

}  // namespace

DiagramPair move_division(const DiagramPair& d, Which which, Direction dir) {
  DiagramPair out = d;
  shift_beads(which == Which::kFirst ? out.first : out.second, dir);
  // Prefactor exponents as functions of the current shifted parameters
  // (g', h'), then the shift applied by the move.
  AffineExp s, c;
  long sg = 0, sh = 0;
  const AffineExp g{1, 0, 0}, h{0, 1, 0}, one_g{-1, 0, 1}, one_h{0, -1, 1};
  if (which == Which::kSecond && dir == Direction::kLeft) {
    s = one_g, c = h, sg = -1, sh = 1;
  } else if (which == Which::kSecond) {
    s = g, c = one_h, sg = 1, sh = -1;
  } else if (dir == Direction::kLeft) {
    s = one_g, c = one_h, sg = -1, sh = -1;
  } else {
    s = g, c = h, sg = 1, sh = 1;
  }
  Ledger& l = out.ledger;
  l.pref_sin += s.shifted(l.dg, l.dh);
  l.pref_cos += c.shifted(l.dg, l.dh);
  l.dg += sg;
  l.dh += sh;
  return out;
}

Reduction reduce(const StateTuple& t, ReductionTarget target) {
  DiagramPair d = tuple_to_diagrams(t);
  auto max_or_none = [](const std::vector<int>& v) { return v.empty() ? -1 : v.back(); };
  const bool keep_i = target == ReductionTarget::kIN || target == ReductionTarget::kIIII;
  const bool keep_n = target == ReductionTarget::kIN || target == ReductionTarget::kIIN;
  const int second_moves =
      1 + (keep_i ? max_or_none(d.second.left_white) : max_or_none(d.second.right_black));
  const int first_moves =
      1 + (keep_n ? max_or_none(d.first.left_white) : max_or_none(d.first.right_black));
  for (int k = 0; k < second_moves; ++k) {
    d = move_division(d, Which::kSecond, keep_i ? Direction::kLeft : Direction::kRight);
  }
  for (int k = 0; k < first_moves; ++k) {
    d = move_division(d, Which::kFirst, keep_n ? Direction::kLeft : Direction::kRight);
  }
  return {diagrams_to_tuple(d), d.ledger};
}

std::vector<int> dbar(const std::vector<int>& indices) {
  if (indices.empty()) return {};
  const int top = *std::max_element(indices.begin(), indices.end());
  std::vector<bool> removed(static_cast<std::size_t>(top) + 1, false);
  for (int d : indices) removed[static_cast<std::size_t>(top - d)] = true;
  std::vector<int> out;
  for (int k = 0; k <= top; ++k) {
    if (!removed[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

Reduction canonical_form(const StateTuple& t) { return reduce(t, ReductionTarget::kIN); }

std::string render_ascii(const MayaDiagram& d) {
  const int left_last = d.left_white.empty() ? -1 : d.left_white.back();
  const int right_last = d.right_black.empty() ? -1 : d.right_black.back();
  const int left_width = std::max(5, left_last + 2);
  const int right_width = std::max(5, right_last + 2);
  auto has = [](const std::vector<int>& v, int k) {
    return std::binary_search(v.begin(), v.end(), k);
  };
  std::string out = "...";
  for (int k = left_width - 1; k >= 0; --k) out += has(d.left_white, k) ? 'o' : '*';
  out += '|';
  for (int k = 0; k < right_width; ++k) out += has(d.right_black, k) ? '*' : 'o';
  return out + "...";
}

ProportionalityReport verify_ledger_identity(const StateTuple& original,
                                             const StateTuple& current, const Ledger& ledger,
                                             const std::vector<ParamPoint>& points) {
  ProportionalityReport r;
  r.original = original;
  r.current = current;
  r.ledger = ledger;
  r.points = points;
  r.symbolic = points.empty();
  for (const auto& p : points) require_generic(p);

  if (r.symbolic) {
    const QuasiPoly lhs = wronskian(original);
    const QuasiPoly rhs = wronskian(current).shifted(ledger.dg, ledger.dh).with_prefactor(
        ledger.pref_sin, ledger.pref_cos);
    r.constant = compare_quasi(lhs, rhs);
    r.proportional = r.constant.has_value();
    if (!r.proportional) {
      r.detail = "lhs " + lhs.to_string() + " is not proportional to rhs " + rhs.to_string();
    }
    return r;
  }

  r.proportional = true;
  for (const auto& p : points) {
    const QuasiPoly lhs = wronskian(original, p);
    const QuasiPoly rhs = wronskian(current, p.shifted(ledger.dg, ledger.dh))
                              .with_prefactor(AffineExp::constant(ledger.pref_sin.evaluate(p.g, p.h)),
                                              AffineExp::constant(ledger.pref_cos.evaluate(p.g, p.h)));
    const auto c = compare_quasi(lhs, rhs);
    if (!c) {
      r.proportional = false;
      r.constant.reset();
      r.detail = "not proportional at (g, h) = " + p.to_string();
      return r;
    }
    if (!r.constant) r.constant = c;
  }
  return r;
}

ProportionalityReport verify_move_identity(const StateTuple& t, Which which, Direction dir,
                                           const std::optional<ParamPoint>& at,
                                           std::size_t symbolic_limit) {
  if (at) require_generic(*at);
  const DiagramPair moved = move_division(tuple_to_diagrams(t), which, dir);
  std::vector<ParamPoint> points;
  if (t.size() > symbolic_limit) points.push_back(at.value_or(default_generic_point()));
  return verify_ledger_identity(t, diagrams_to_tuple(moved), moved.ledger, points);
}

}  // namespace wronski
