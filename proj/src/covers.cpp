#include "posdiag/covers.hpp"

#include <algorithm>
#include <utility>

#include "posdiag/error.hpp"

namespace posdiag {

Integer lifted_diagram_genus(const Integer& g, const Integer& lambda) {
  if (g < 0) throw_precondition("InvalidArgument", "genus must be >= 0");
  if (lambda < 1) throw_precondition("InvalidArgument", "sheet count must be >= 1");
  return lambda * (g - 1) + 1;
}

SeifertData lift_seifert(const SeifertData& s, const CoverSpec& spec) {
  validate(s);
  if (s.mode != InvariantMode::NonNormalized)
    throw_precondition("InvalidInvariant", "lift_seifert expects non-normalized invariants");
  if (spec.lambda < 1) throw_precondition("IncompatibleSpec", "sheet count must be >= 1");
  if (spec.partitions.size() != s.fibers.size())
    throw_precondition("IncompatibleSpec", "one partition per boundary is required");

  const Integer r = static_cast<unsigned long>(s.fibers.size());
  Integer parts = 0;
  Integer ramification = 0;  // sum of (b - 1)
  std::vector<FiberInvariant> fibers;
  for (std::size_t i = 0; i < s.fibers.size(); ++i) {
    const auto& f = s.fibers[i];
    Integer total = 0;
    for (const auto& b : spec.partitions[i]) {
      if (b < 1) throw_precondition("IncompatibleSpec", "partition parts must be positive");
      if (f.alpha % b != 0)
        throw_precondition("IncompatibleSpec", "part does not divide alpha of its boundary");
      if (gcd(f.beta, b) != 1)
        throw_precondition("IncompatibleSpec", "part shares a factor with beta of its boundary");
      total += b;
      ramification += b - 1;
      fibers.push_back({f.alpha / b, f.beta});
    }
    if (total != spec.lambda)
      throw_precondition("IncompatibleSpec", "partition of boundary " + std::to_string(i) +
                                                 " does not sum to the sheet count");
    parts += static_cast<unsigned long>(spec.partitions[i].size());
  }

  const Integer excess = r * spec.lambda - parts;
  if (excess % 2 != 0) throw_precondition("ParityError", "r lambda - sum r_i is odd");
  const Integer genus = spec.lambda * (s.base_genus - 1) + 1 + excess / 2;
  if (ramification % 2 != 0 || genus != spec.lambda * (s.base_genus - 1) + 1 + ramification / 2)
    throw_internal("ParityError", "genus formulas disagree");
  if (genus < 0) throw_precondition("IncompatibleSpec", "no cover with this branching exists");
  return make_non_normalized(genus, std::move(fibers));
}

namespace {

std::vector<std::pair<Integer, unsigned>> factor_odd(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 3; p * p <= n; p += 2) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Multipliers k_i summing to zero with p not dividing beta_i + k_i alpha_i.
std::vector<Integer> shifts_for_prime(const std::vector<BetaPair>& pairs, const Integer& p) {
  std::vector<Integer> k(pairs.size(), 0);
  std::vector<std::size_t> hit;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].beta % p == 0) hit.push_back(i);
  if (hit.empty()) return k;

  if (hit.size() == 1) {
    if (pairs.size() == 1)
      throw_precondition("NoSolution", "a single slope whose beta shares a factor with lambda");
    const std::size_t s = hit[0];
    const std::size_t j = s == 0 ? 1 : 0;
    if ((pairs[j].beta - pairs[j].alpha) % p != 0) {
      k[s] = 1;
      k[j] = -1;
    } else {
      k[s] = -1;
      k[j] = 1;
    }
  } else if (hit.size() % 2 == 0) {
    for (std::size_t t = 0; t < hit.size(); ++t) k[hit[t]] = t < hit.size() / 2 ? 1 : -1;
  } else {
    k[hit[0]] = 2;
    const std::size_t plus = (hit.size() - 1) / 2;
    for (std::size_t t = 1; t < hit.size(); ++t) k[hit[t]] = t < plus ? 1 : -1;
  }
  return k;
}

}  // namespace

std::vector<Integer> beta_star(const std::vector<BetaPair>& pairs, const Integer& lambda) {
  if (lambda < 1 || lambda % 2 == 0)
    throw_precondition("InvalidArgument", "lambda must be odd and positive");
  for (const auto& pr : pairs)
    if (pr.alpha < 1 || gcd(pr.alpha, pr.beta) != 1)
      throw_precondition("InvalidArgument", "pairs must have alpha >= 1 and be coprime");

  std::vector<Integer> out;
  for (const auto& pr : pairs) out.push_back(pr.beta);
  const auto primes = factor_odd(lambda);
  bool clean = true;
  for (const auto& b : out) clean = clean && gcd(b, lambda) == 1;
  if (clean || pairs.empty()) return out;

  // For each prime power p^e of lambda, beta_i + k_i alpha_i is a unit mod
  // p with sum k_i = 0; CRT over alpha_i p^e glues these together.
  std::vector<std::vector<Congruence>> systems(pairs.size());
  for (const auto& [p, e] : primes) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    const auto k = shifts_for_prime(pairs, p);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      systems[i].push_back({pairs[i].beta + k[i] * pairs[i].alpha, pairs[i].alpha * pe});
  }
  Integer drift = 0;  // sum of the multipliers of alpha_i, a multiple of lambda
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[i] = crt(systems[i]).residue;
    drift += (out[i] - pairs[i].beta) / pairs[i].alpha;
  }
  if (drift % lambda != 0) throw_internal("Incompatible", "floor sum drift not divisible by lambda");
  out[0] -= drift * pairs[0].alpha;
  return out;
}

BaseCover base_orbifold_cover(const SeifertData& input) {
  const SeifertData s = normalize(input);
  if (s.fibers.size() > 3) throw_precondition("TooManyFibers", "at most three fibers supported");
  if (s.base_genus < 1) throw_precondition("BaseGenusZero", "base genus must be >= 1");

  std::vector<BetaPair> pairs;
  for (const auto& f : s.fibers) pairs.push_back({f.alpha, f.beta});
  while (pairs.size() < 3) pairs.push_back({1, 0});
  pairs[0].beta -= *s.euler * pairs[0].alpha;

  BaseCover out;
  out.lambda = 2 * s.base_genus + 1;
  const auto star = beta_star(pairs, out.lambda);
  std::vector<FiberInvariant> fibers;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    fibers.push_back({out.lambda * pairs[i].alpha, star[i]});
    out.spec.partitions.push_back({out.lambda});
  }
  out.base = make_non_normalized(0, std::move(fibers));
  out.spec.lambda = out.lambda;
  return out;
}

Integer positive_genus_bound(const SeifertData& input) {
  const SeifertData s = normalize(input);
  if (s.fibers.size() > 3) throw_precondition("TooManyFibers", "at most three fibers supported");
  const Integer bound = 2 * s.base_genus + 2;
  if (lifted_diagram_genus(2, 2 * s.base_genus + 1) != bound)
    throw_internal("Inconsistent", "lifted genus disagrees with 2g + 2");
  return bound;
}

}  // namespace posdiag
