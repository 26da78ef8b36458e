#pragma once

// Covering-space arithmetic carried out on Seifert invariants only: the
// genus of lifted diagrams, the invariants of a finite cover determined by
// its boundary branching, and the cyclic cover that turns a base of genus
// g > 0 with at most three fibers into one over the sphere.

#include <vector>

#include "posdiag/exactalg.hpp"
#include "posdiag/seifert.hpp"

namespace posdiag {

/// Branching of a lambda-sheeted cover of the base surface with boundary:
/// boundary i has preimages of degrees partitions[i][0], partitions[i][1], ...
struct CoverSpec {
  Integer lambda = 1;
  std::vector<std::vector<Integer>> partitions;

  bool operator==(const CoverSpec&) const = default;
};

/// lambda (g - 1) + 1. Throws Error{"InvalidArgument"} for g < 0 or lambda < 1.
Integer lifted_diagram_genus(const Integer& g, const Integer& lambda);

/// Non-normalized invariants of the cover: base genus
/// lambda (g - 1) + 1 + (r lambda - sum r_i) / 2 and, for each part b of
/// boundary i, a fiber alpha_i / b with the same beta_i.
/// Throws Error{"IncompatibleSpec"} when a partition does not sum to lambda,
/// b does not divide alpha_i, gcd(beta_i, b) != 1 or the partition count
/// differs from the fiber count, and Error{"ParityError"} when
/// r lambda - sum r_i is odd.
SeifertData lift_seifert(const SeifertData& s, const CoverSpec& spec);

struct BetaPair {
  Integer alpha;
  Integer beta;
};

/// beta*_i = beta_i (mod alpha_i), gcd(beta*_i, lambda) = 1 and the floor
/// sum of beta*_i / alpha_i equals that of beta_i / alpha_i. Works one odd
/// prime power of lambda at a time and glues the pieces by CRT.
/// Throws Error{"InvalidArgument"} for even or non-positive lambda or a
/// non-coprime pair, and Error{"NoSolution"} for a single pair whose beta
/// shares a factor with lambda (no solution exists then).
std::vector<Integer> beta_star(const std::vector<BetaPair>& pairs, const Integer& lambda);

struct BaseCover {
  SeifertData base;  // non-normalized, over S^2, three fibers
  Integer lambda;    // 2g + 1
  CoverSpec spec;    // each boundary covered by one circle of degree lambda
};

/// Throws Error{"TooManyFibers"} for m > 3 and Error{"BaseGenusZero"} for g = 0.
BaseCover base_orbifold_cover(const SeifertData& s);

/// 2g + 2, the genus of a positive diagram obtained by lifting a genus-2
/// positive diagram through the cyclic cover. Throws Error{"TooManyFibers"}
/// for m > 3.
Integer positive_genus_bound(const SeifertData& s);

}  // namespace posdiag
