#include "posdiag/presentation.hpp"

#include <cstdlib>
#include <string>

#include "posdiag/error.hpp"

namespace posdiag {

void validate(const Presentation& p) {
  if (p.n_generators < 0)
    throw_precondition("InvalidPresentation", "negative generator count");
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r])
      if (letter == 0 || std::abs(letter) > p.n_generators)
        throw_precondition("InvalidPresentation",
                           "relator " + std::to_string(r + 1) + " has letter " +
                               std::to_string(letter) + " outside 1.." +
                               std::to_string(p.n_generators));
}

bool is_positive(const Presentation& p) {
  for (const auto& w : p.relators)
    for (int letter : w)
      if (letter < 0) return false;
  return true;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Presentation positivize(const Presentation& p) {
  validate(p);
  const int n = p.n_generators;
  const int extra = n + 1;

  Presentation out;
  out.n_generators = extra;
  out.relators.reserve(p.relators.size() + 1);

  Word cycle;
  for (int i = 1; i <= extra; ++i) cycle.push_back(i);
  out.relators.push_back(cycle);

  for (const auto& w : p.relators) {
    Word positive;
    for (int letter : free_reduce(w)) {
      if (letter > 0) {
        positive.push_back(letter);
        continue;
      }
      // x_i^{-1} = x_{i+1} ... x_n x_{n+1} x_1 ... x_{i-1}
      const int i = -letter;
      for (int j = i + 1; j <= extra; ++j) positive.push_back(j);
      for (int j = 1; j < i; ++j) positive.push_back(j);
    }
    out.relators.push_back(std::move(positive));
  }
  return out;
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
  validate(p);
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.n_generators));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r])
      m(r, static_cast<std::size_t>(std::abs(letter) - 1)) += letter > 0 ? 1 : -1;
  return m;
}

SnfResult abelianization(const Presentation& p) { return snf(exponent_sum_matrix(p)); }

}  // namespace posdiag
