#pragma once

// Finite group presentations with relators written as signed generator
// indices: +i stands for x_i, -i for x_i^{-1}, 1 <= i <= n_generators.

#include <vector>

#include "posdiag/exactalg.hpp"

namespace posdiag {

using Word = std::vector<int>;

struct Presentation {
  int n_generators = 0;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

/// Throws Error{"InvalidPresentation"} on a zero letter or an index outside
/// 1..n_generators.
void validate(const Presentation& p);

/// True iff no relator contains an inverse letter.
bool is_positive(const Presentation& p);

/// Cancels adjacent x x^{-1} pairs (not cyclically).
Word free_reduce(const Word& w);

/// Positive presentation of the same group with one more generator and one
/// more relator. The new first relator is x_1 x_2 ... x_{n+1}; in every
/// other (freely reduced) relator each x_i^{-1} becomes
/// x_{i+1} ... x_n x_{n+1} x_1 ... x_{i-1}.
Presentation positivize(const Presentation& p);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_sum_matrix(const Presentation& p);

SnfResult abelianization(const Presentation& p);

}  // namespace posdiag
