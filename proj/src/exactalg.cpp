#include "posdiag/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "posdiag/error.hpp"

namespace posdiag {

GcdResult ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = abs(a), r = abs(b);
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;  // both non-negative, truncation == floor
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r == 0) return {0, 0, 0};
  if (sgn(a) < 0) old_s = -old_s;
  if (sgn(b) < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Congruence crt(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus < 1)
      throw_precondition("InvalidModulus", "crt: moduli must be >= 1");
    // acc.residue + acc.modulus * k == c.residue  (mod c.modulus)
    const GcdResult bz = ext_gcd(acc.modulus, c.modulus);
    const Integer diff = c.residue - acc.residue;
    if (mod_floor(diff, bz.g) != 0) {
      std::ostringstream msg;
      msg << "crt: " << acc.residue << " mod " << acc.modulus << " and "
          << c.residue << " mod " << c.modulus << " disagree modulo " << bz.g;
      throw_precondition("Incompatible", msg.str());
    }
    const Integer step = c.modulus / bz.g;
    const Integer k = mod_floor((diff / bz.g) * bz.x, step);
    const Integer lcm = acc.modulus * step;
    acc.residue = mod_floor(acc.residue + acc.modulus * k, lcm);
    acc.modulus = lcm;
  }
  return acc;
}

Integer least_positive_residue(const Integer& b, const Integer& a) {
  if (a < 1)
    throw_precondition("InvalidModulus", "least_positive_residue: modulus must be >= 1");
  Integer r = mod_floor(b, a);
  if (r == 0) r = a;
  return r;
}

Integer floor_sum(std::span<const Ratio> fractions) {
  Integer total = 0;
  for (const auto& f : fractions) {
    if (f.alpha < 1)
      throw_precondition("InvalidInvariant", "floor_sum: denominators must be >= 1");
    total += floor_div(f.beta, f.alpha);
  }
  return total;
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw_precondition("InvalidMatrix", "IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

// ---------------------------------------------------------------------------

namespace {

// Moves the smallest non-zero |entry| of the trailing block to (t, t).
bool place_pivot(IntMatrix& a, std::size_t t) {
  bool found = false;
  std::size_t bi = t, bj = t;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!found || abs(a(i, j)) < best) {
        best = abs(a(i, j));
        bi = i;
        bj = j;
        found = true;
      }
    }
  if (!found) return false;
  a.swap_rows(t, bi);
  a.swap_cols(t, bj);
  return true;
}

}  // namespace

std::vector<Integer> smith_diagonal(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(a, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        a.add_row_multiple(i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        a.add_col_multiple(j, t, -floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(a, t);
        continue;
      }
      // Pivot row and column are clear; enforce divisibility of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (mod_floor(a(i, j), abs(a(t, t))) != 0) {
            a.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) a(t, t) = -a(t, t);
  }
  std::vector<Integer> diag;
  diag.reserve(n);
  for (std::size_t t = 0; t < n; ++t) diag.push_back(abs(a(t, t)));
  return diag;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult out;
  for (auto& d : smith_diagonal(m))
    if (d != 0) out.invariant_factors.push_back(d);
  out.free_rank = m.cols() - out.invariant_factors.size();
  return out;
}

AbelianGroup SnfResult::group() const {
  AbelianGroup g;
  g.free_rank = free_rank;
  for (const auto& f : invariant_factors)
    if (f != 1) g.torsion.push_back(f);
  return g;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols())
    throw_precondition("InvalidMatrix", "determinant: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace posdiag
