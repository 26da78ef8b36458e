#pragma once

// Exact integer algebra: Bezout coefficients, Chinese remaindering,
// residues, floor sums and the Smith normal form of integer matrices.
// All arithmetic is arbitrary precision (GMP).

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace posdiag {

using Integer = mpz_class;

struct GcdResult {
  Integer g;  // gcd(|a|, |b|) >= 0
  Integer x;
  Integer y;  // a*x + b*y == g
};

GcdResult ext_gcd(const Integer& a, const Integer& b);

struct Congruence {
  Integer residue;
  Integer modulus;  // >= 1
};

/// Combines congruences with arbitrary (not necessarily coprime) moduli.
/// The result has modulus lcm(...) and residue in [0, modulus).
/// Throws Error{"Incompatible"} when two residues disagree modulo the gcd
/// of their moduli.
Congruence crt(std::span<const Congruence> system);

/// Representative of b mod a in [1, a]. For a == 1 this is always 1; for
/// a > 1 and gcd(a, b) == 1 the result lies strictly inside (0, a).
Integer least_positive_residue(const Integer& b, const Integer& a);

/// floor(num / den) for den != 0, rounding toward negative infinity.
Integer floor_div(const Integer& num, const Integer& den);

/// Non-negative remainder of a modulo m (m >= 1).
Integer mod_floor(const Integer& a, const Integer& m);

/// A slope beta/alpha; alpha >= 1 wherever floor sums are taken.
struct Ratio {
  Integer beta;
  Integer alpha;
};

Integer floor_sum(std::span<const Ratio> fractions);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// A finitely generated abelian group Z^free_rank + (+) Z/torsion[i],
/// torsion factors all > 1 and each dividing the next.
struct AbelianGroup {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool operator==(const AbelianGroup&) const = default;
  std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"
};

/// Smith normal form read as the cokernel Z^cols / (row space).
struct SnfResult {
  // Non-zero diagonal entries (1s included), each dividing the next.
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool operator==(const SnfResult&) const = default;

  /// Drops unit factors: two SnfResults describe isomorphic groups iff
  /// their group() values compare equal.
  AbelianGroup group() const;
};

SnfResult snf(const IntMatrix& m);

/// Full Smith diagonalisation: returns the min(rows, cols) diagonal,
/// non-negative, divisibility ordered, zeros last.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free Bareiss).
Integer determinant(const IntMatrix& m);

}  // namespace posdiag
