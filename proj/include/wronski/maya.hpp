#pragma once

// Pairs of Maya diagrams with a movable division.
//
//   first diagram:  white beads left of the division  <-> type III seeds
//                   black beads right of the division <-> eigenstates (N)
//   second diagram: white beads left of the division  <-> type II seeds
//                   black beads right of the division <-> type I seeds
//
// Position d counts outward from the division, starting at 0 on each side.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wronski/affine_exp.hpp"
#include "wronski/params.hpp"
#include "wronski/quasi.hpp"
#include "wronski/states.hpp"

namespace wronski {

struct MayaDiagram {
  std::vector<int> left_white;   // increasing
  std::vector<int> right_black;  // increasing
  long offset = 0;

  bool operator==(const MayaDiagram&) const = default;
};

/// Accumulated effect of division moves:
///   W[original](g, h) ∝ (sin x)^pref_sin (cos x)^pref_cos W[current](g + dg, h + dh)
struct Ledger {
  long dg = 0;
  long dh = 0;
  AffineExp pref_sin;
  AffineExp pref_cos;

  bool operator==(const Ledger&) const = default;
  std::string to_string() const;  // "(-5, 1, 15 - 5g, h)"
};

struct DiagramPair {
  MayaDiagram first;
  MayaDiagram second;
  Ledger ledger;

  bool operator==(const DiagramPair&) const = default;
};

enum class Which { kFirst, kSecond };
enum class Direction { kLeft, kRight };

enum class ReductionTarget { kIN, kIIII, kIIN, kIIIII };

inline constexpr std::array<ReductionTarget, 4> kAllTargets{
    ReductionTarget::kIN, ReductionTarget::kIIII, ReductionTarget::kIIN, ReductionTarget::kIIIII};

std::string_view to_string(ReductionTarget t);  // "I,N", "I,III", "II,N", "II,III"
/// Accepts the forms above, with or without parentheses. Throws ParseError.
ReductionTarget parse_target(std::string_view s);

/// Throws InvalidTuple on repeated indices (inherited from StateTuple).
DiagramPair tuple_to_diagrams(const StateTuple& t);

/// Inverse of tuple_to_diagrams up to order: states come out sorted by type
/// (I, II, III, N) and then by index.
StateTuple diagrams_to_tuple(const DiagramPair& d);

DiagramPair move_division(const DiagramPair& d, Which which, Direction dir);

struct Reduction {
  StateTuple tuple;
  Ledger ledger;
};

/// Moves divisions until only the two target types remain:
///   (I,N):    second left  d^II_max + 1 times,  first left  d^III_max + 1 times
///   (I,III):  second left  d^II_max + 1 times,  first right d^N_max + 1 times
///   (II,N):   second right d^I_max + 1 times,   first left  d^III_max + 1 times
///   (II,III): second right d^I_max + 1 times,   first right d^N_max + 1 times
/// An absent type contributes zero moves.
Reduction reduce(const StateTuple& t, ReductionTarget target);

/// {0, ..., max} minus {max - d : d in indices}; empty for empty input.
std::vector<int> dbar(const std::vector<int>& indices);

/// The (I,N) reduction, used as the representative of the class.
Reduction canonical_form(const StateTuple& t);

/// "...***o*|ooooo...": '*' black, 'o' white, '|' the division. Each side
/// shows max(5, last nontrivial position + 2) beads.
std::string render_ascii(const MayaDiagram& d);

struct ProportionalityReport {
  StateTuple original;
  StateTuple current;
  Ledger ledger;
  bool symbolic = true;
  std::vector<ParamPoint> points;  // instantiations used when not symbolic
  bool proportional = false;
  std::optional<ParamRat> constant;  // W[original] = constant · rhs (symbolic case or first point)
  std::string detail;
};

/// Checks W[original](g,h) ∝ (sin x)^pref_sin (cos x)^pref_cos W[current](g+dg, h+dh)
/// symbolically, or at each given point when points is non-empty. Throws
/// NonGenericParameters for excluded points.
ProportionalityReport verify_ledger_identity(const StateTuple& original,
                                             const StateTuple& current, const Ledger& ledger,
                                             const std::vector<ParamPoint>& points = {});

/// One division move followed by verify_ledger_identity. Symbolic when
/// |t| <= symbolic_limit, otherwise at `at` (default point if absent).
/// A supplied point must be generic even when the check runs symbolically.
ProportionalityReport verify_move_identity(const StateTuple& t, Which which, Direction dir,
                                           const std::optional<ParamPoint>& at = std::nullopt,
                                           std::size_t symbolic_limit = 5);

}  // namespace wronski
