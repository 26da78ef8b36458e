#pragma once

// Combinatorial Heegaard diagrams. A diagram is recorded by the cyclic
// order of crossings met while traversing each oriented curve, and the
// sign <X,Y>_p of each crossing. No embedding is stored: the surface is
// recovered when needed from the rotation system that the signs force.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "posdiag/exactalg.hpp"
#include "posdiag/presentation.hpp"

namespace posdiag {

using CrossingId = std::int64_t;
using Curve = std::vector<CrossingId>;

struct Diagram {
  std::int64_t declared_genus = 0;
  std::vector<Curve> x_curves;
  std::vector<Curve> y_curves;
  std::map<CrossingId, int> crossing_signs;

  bool operator==(const Diagram&) const = default;

  std::size_t crossing_count() const noexcept { return crossing_signs.size(); }
};

enum class ViolationKind {
  NegativeGenus,
  NoXCurves,
  NoYCurves,
  DuplicateOnX,
  DuplicateOnY,
  MissingOnX,
  MissingOnY,
  MissingSign,
  UnknownSign,
  BadSign
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  CrossingId crossing = 0;
  std::string detail;
};

/// Every invariant of Diagram checked exhaustively; empty means valid.
std::vector<Violation> validate(const Diagram& dg);

/// Throws Error{"InvalidDiagram"} carrying the first violation.
void require_valid(const Diagram& dg);

bool is_positive_diagram(const Diagram& dg);

/// Genus of the closed oriented surface obtained by capping the faces of
/// the ribbon graph X u Y. The cyclic order at a +1 crossing is
/// (X-out, Y-out, X-in, Y-in) counterclockwise, and (X-out, Y-in, X-in,
/// Y-out) at a -1 crossing. Throws Error{"IsolatedCurve"} if some curve has
/// no crossing and Error{"Disconnected"} if X u Y is not connected.
std::int64_t rotation_genus(const Diagram& dg);

/// Sum of rotation genera of the connected components of X u Y (each
/// component closed up separately, then connect-summed).
std::int64_t rotation_genus_by_component(const Diagram& dg);

/// Connected components of X u Y as sets of crossing ids.
std::vector<std::vector<CrossingId>> components(const Diagram& dg);

/// One generator per X curve, one relator per Y curve spelling the X curves
/// met along it, each letter signed by the crossing sign.
Presentation diagram_presentation(const Diagram& dg);

SnfResult diagram_homology(const Diagram& dg);

/// Successor permutations of a positive diagram on crossings 1..d.
/// sigma_x[i-1] is the crossing following i along its X curve.
struct PermutationPair {
  std::vector<int> sigma_x;
  std::vector<int> sigma_y;

  std::size_t degree() const noexcept { return sigma_x.size(); }
  bool operator==(const PermutationPair&) const = default;
};

/// Throws Error{"InvalidPermutation"} unless both are bijections on 1..d.
void validate(const PermutationPair& p);

/// Crossings are relabelled 1..d in increasing id order. Throws
/// Error{"NotPositive"} for a diagram with a -1 crossing.
PermutationPair montesinos_encode(const Diagram& dg);

/// Positive diagram with crossings 1..d; curves are the cycles of the
/// permutations, each listed from its least element, ordered by it.
/// The declared genus is rotation_genus_by_component of the result.
Diagram montesinos_decode(const PermutationPair& p);

/// Same combinatorics with curves rotated to start at their least crossing
/// and listed in order of that crossing.
Diagram canonical_form(const Diagram& dg);

/// Relabels crossings through `relabel` (must be injective on the ids).
Diagram relabel_crossings(const Diagram& dg, const std::map<CrossingId, CrossingId>& relabel);

/// Diagnostic Graphviz rendering of the 4-valent graph.
std::string to_dot(const Diagram& dg);

}  // namespace posdiag
