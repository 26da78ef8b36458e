#pragma once

// Positive Heegaard diagrams for vertical splittings of Seifert fibered
// spaces over S^2.
//
// The base sphere is cut into disks D_1..D_{r-1} arranged in a chain,
// consecutive ones joined by squares F_1..F_{r-2}, and a single disk E
// (the complement). One handlebody is f^-1(D) plus the lower halves of the
// squares, the other is f^-1(E) plus the upper halves. Meridians X_i of
// the solid tori over the D_i form one curve system; the meridian Y_1 over
// E and the boundaries of the vertical disks B_q in the squares form the
// other. Choosing the slopes with alternating signs along the chain and a
// positive slope on E makes every crossing positive.

#include <cstddef>
#include <utility>
#include <vector>

#include "posdiag/diagram.hpp"
#include "posdiag/seifert.hpp"

namespace posdiag {

struct ChainPlan {
  std::size_t r = 3;                    // fiber slots after padding, >= 3
  std::vector<std::size_t> d_disks;     // fiber slot carried by D_1..D_{r-1}
  std::size_t e_disk = 2;               // fiber slot carried by E
  std::vector<std::pair<std::size_t, std::size_t>> squares;  // F_q joins D_q, D_{q+1}
  std::vector<std::pair<std::size_t, std::size_t>> gamma_d;  // path on the D vertices
  std::size_t gamma_e_loops = 1;        // single E vertex with r-2 loops
  std::vector<SignConstraint> sign_pattern;  // required sign of beta' per slot
  std::vector<std::size_t> b_disks;     // squares carrying vertical disks of the E side
  std::vector<std::size_t> a_disks;     // squares carrying vertical disks of the D side
  std::size_t s_host = 0;               // D disk over which the E meridian turns

  bool operator==(const ChainPlan&) const = default;
};

/// Chain decomposition for m singular fibers, padded to r = max(m, 3).
ChainPlan plan_decomposition(std::size_t m);

/// Throws Error{"InvalidPlan"} if the plan breaks a chain invariant.
void check_plan(const ChainPlan& plan);

/// Non-normalized slopes (one per slot, alpha = 1 on padded slots) with the
/// plan's signs, normalizing back to `s`.
std::vector<FiberInvariant> assign_betas(const SeifertData& s, const ChainPlan& plan);

/// Crossing sequences of the vertical splitting's curves. Every crossing is
/// positive and the declared genus is r - 1.
Diagram synthesize_diagram(const ChainPlan& plan, const std::vector<FiberInvariant>& slopes);

/// plan -> assign -> synthesize, then checks positivity, curve counts, the
/// rotation genus bound and H_1 against the invariants. Throws
/// Error{"BaseGenusUnsupported"} for g > 0 and
/// Error{"SynthesisInvariantViolation"} if a check fails.
Diagram build_positive_vertical(const SeifertData& s);

}  // namespace posdiag
