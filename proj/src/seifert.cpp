#include "posdiag/seifert.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "posdiag/error.hpp"

namespace posdiag {

SeifertData make_normalized(Integer genus, std::vector<FiberInvariant> fibers,
                            Integer euler) {
  SeifertData s;
  s.base_genus = std::move(genus);
  s.mode = InvariantMode::Normalized;
  s.fibers = std::move(fibers);
  s.euler = std::move(euler);
  return s;
}

SeifertData make_non_normalized(Integer genus, std::vector<FiberInvariant> fibers) {
  SeifertData s;
  s.base_genus = std::move(genus);
  s.mode = InvariantMode::NonNormalized;
  s.fibers = std::move(fibers);
  return s;
}

namespace {

std::string slope_text(const FiberInvariant& f) {
  std::ostringstream os;
  os << f.beta << "/" << f.alpha;
  return os.str();
}

std::vector<Ratio> as_ratios(const std::vector<FiberInvariant>& fibers) {
  std::vector<Ratio> out;
  out.reserve(fibers.size());
  for (const auto& f : fibers) out.push_back({f.beta, f.alpha});
  return out;
}

int to_int(const Integer& v, const char* what) {
  if (!v.fits_sint_p())
    throw_precondition("TooLarge", std::string(what) + " does not fit a machine integer");
  return static_cast<int>(v.get_si());
}

}  // namespace

void validate(const SeifertData& s) {
  if (s.base_genus < 0) throw_precondition("InvalidInvariant", "base genus must be >= 0");
  for (const auto& f : s.fibers) {
    if (f.alpha < 1)
      throw_precondition("InvalidInvariant", "fiber " + slope_text(f) + ": alpha must be >= 1");
    if (gcd(f.alpha, f.beta) != 1)
      throw_precondition("InvalidInvariant",
                         "fiber " + slope_text(f) + ": alpha and beta are not coprime");
    if (s.mode == InvariantMode::Normalized && (f.alpha < 2 || f.beta <= 0 || f.beta >= f.alpha))
      throw_precondition("InvalidInvariant", "fiber " + slope_text(f) +
                                                 " is not normalized (need 0 < beta < alpha)");
  }
  if (s.mode == InvariantMode::Normalized && !s.euler)
    throw_precondition("InvalidInvariant", "normalized data requires an Euler number");
  if (s.mode == InvariantMode::NonNormalized && s.euler)
    throw_precondition("InvalidInvariant",
                       "non-normalized data carries its Euler number in the slopes");
}

SeifertData normalize(const SeifertData& s) {
  validate(s);
  if (s.mode == InvariantMode::Normalized) return s;

  std::vector<FiberInvariant> fibers;
  for (const auto& f : s.fibers)
    if (f.alpha > 1) fibers.push_back({f.alpha, least_positive_residue(f.beta, f.alpha)});
  const auto ratios = as_ratios(s.fibers);
  return make_normalized(s.base_genus, std::move(fibers), -floor_sum(ratios));
}

SeifertData denormalize(const SeifertData& input, const std::vector<SignConstraint>& pattern,
                        std::size_t absorber_index) {
  const SeifertData s = normalize(input);
  const std::size_t m = s.fibers.size();
  if (pattern.size() < m)
    throw_precondition("UnsatisfiablePattern", "sign pattern is shorter than the fiber list");

  std::vector<FiberInvariant> slots;
  slots.reserve(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const bool padded = i >= m;
    const Integer alpha = padded ? Integer(1) : s.fibers[i].alpha;
    const Integer beta = padded ? Integer(0) : s.fibers[i].beta;
    Integer b;
    switch (pattern[i]) {
      case SignConstraint::Positive: b = padded ? Integer(1) : beta; break;
      case SignConstraint::Negative: b = padded ? Integer(-1) : Integer(beta - alpha); break;
      case SignConstraint::Free: b = beta; break;
    }
    slots.push_back({alpha, b});
  }

  const Integer deficit = -*s.euler - floor_sum(as_ratios(slots));
  if (deficit != 0) {
    if (absorber_index < slots.size() && pattern[absorber_index] == SignConstraint::Free) {
      slots[absorber_index].beta += deficit * slots[absorber_index].alpha;
    } else {
      const SignConstraint want = deficit > 0 ? SignConstraint::Positive : SignConstraint::Negative;
      std::vector<std::size_t> takers;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (pattern[i] == want) takers.push_back(i);
      if (takers.empty()) {
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (pattern[i] == SignConstraint::Free) {
            takers.push_back(i);
            break;
          }
      }
      if (takers.empty())
        throw_precondition("UnsatisfiablePattern",
                           "no slot can absorb a floor-sum change of " + deficit.get_str());

      const Integer units = abs(deficit);
      const Integer count = static_cast<long>(takers.size());
      const Integer base = units / count;
      const std::size_t rem = Integer(units % count).get_ui();
      std::size_t start = 0;
      const auto it = std::find(takers.begin(), takers.end(), absorber_index);
      if (it != takers.end()) start = static_cast<std::size_t>(it - takers.begin());
      const int dir = sgn(deficit);
      for (std::size_t j = 0; j < takers.size(); ++j) {
        const std::size_t slot = takers[j];
        Integer shift = base;
        if ((j + takers.size() - start) % takers.size() < rem) shift += 1;
        slots[slot].beta += dir * shift * slots[slot].alpha;
      }
    }
  }
  return make_non_normalized(s.base_genus, std::move(slots));
}

Presentation sfs_presentation(const SeifertData& input) {
  const SeifertData s = normalize(input);
  const int g = to_int(s.base_genus, "base genus");
  const int m = static_cast<int>(s.fibers.size());
  const int t = 2 * g + m + 1;
  auto a = [](int j) { return 2 * j + 1; };  // j is 0-based
  auto b = [](int j) { return 2 * j + 2; };
  auto x = [g](int i) { return 2 * g + i + 1; };

  constexpr long kMaxLetters = 1'000'000;
  auto power = [&](Word& w, int gen, const Integer& exponent) {
    if (abs(exponent) > kMaxLetters)
      throw_precondition("TooLarge", "exponent too large to spell out a relator");
    const long e = exponent.get_si();
    for (long k = 0; k < std::labs(e); ++k) w.push_back(e > 0 ? gen : -gen);
  };
  auto commutator = [](int u, int v) { return Word{u, v, -u, -v}; };

  Presentation p;
  p.n_generators = t;
  for (int i = 0; i < m; ++i) {
    Word w;
    power(w, x(i), s.fibers[i].alpha);
    power(w, t, s.fibers[i].beta);
    p.relators.push_back(std::move(w));
  }
  Word longest;
  for (int j = 0; j < g; ++j) {
    const Word c = commutator(a(j), b(j));
    longest.insert(longest.end(), c.begin(), c.end());
  }
  for (int i = 0; i < m; ++i) longest.push_back(x(i));
  power(longest, t, *s.euler);
  p.relators.push_back(std::move(longest));
  for (int j = 0; j < g; ++j) {
    p.relators.push_back(commutator(a(j), t));
    p.relators.push_back(commutator(b(j), t));
  }
  for (int i = 0; i < m; ++i) p.relators.push_back(commutator(x(i), t));
  return p;
}

IntMatrix relation_matrix(const SeifertData& input) {
  const SeifertData s = normalize(input);
  const std::size_t m = s.fibers.size();
  IntMatrix mat(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    mat(i, i) = s.fibers[i].alpha;
    mat(i, m) = s.fibers[i].beta;
  }
  for (std::size_t i = 0; i < m; ++i) mat(m, i) = 1;
  mat(m, m) = *s.euler;
  return mat;
}

SnfResult homology(const SeifertData& s) {
  SnfResult h = snf(relation_matrix(s));
  const Integer surface = 2 * s.base_genus;
  if (!surface.fits_ulong_p()) throw_precondition("TooLarge", "base genus too large");
  h.free_rank += surface.get_ui();
  return h;
}

Integer vertical_genus_bound(const SeifertData& input) {
  const SeifertData s = normalize(input);
  const Integer g2 = 2 * s.base_genus;
  const Integer m = static_cast<unsigned long>(s.fibers.size());
  return std::max<Integer>(g2 + 1, g2 + m - 1);
}

// ---------------------------------------------------------------------------

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::EvenHalves: return "even-halves";
    case FamilyId::SingleReciprocal: return "single-reciprocal";
    case FamilyId::HalfThird: return "half-third";
    case FamilyId::HalfQuarter: return "half-quarter";
    case FamilyId::ThirdThird: return "third-third";
  }
  return "?";
}

std::string to_string(GenusCase c) {
  switch (c) {
    case GenusCase::ThmA1: return "ThmA1";
    case GenusCase::ThmA2: return "ThmA2";
    case GenusCase::ThmA3: return "ThmA3";
    case GenusCase::Generic_g0: return "Generic_g0";
    case GenusCase::Generic_gpos: return "Generic_gpos";
    case GenusCase::ThmB_family: return "ThmB_family";
    case GenusCase::SmallLens_extension: return "SmallLens_extension";
  }
  return "?";
}

std::string to_string(HorizontalPositivity p) {
  switch (p) {
    case HorizontalPositivity::Unknown: return "unknown";
    case HorizontalPositivity::Positive: return "positive";
    case HorizontalPositivity::NotPositive: return "not-positive";
    case HorizontalPositivity::Open: return "open";
  }
  return "?";
}

namespace {

bool is_slope(const FiberInvariant& f, long beta, long alpha) {
  return f.beta == beta && f.alpha == alpha;
}

// Removes one fiber equal to beta/alpha; false if absent.
bool take(std::vector<FiberInvariant>& pool, long beta, long alpha) {
  const auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const FiberInvariant& f) { return is_slope(f, beta, alpha); });
  if (it == pool.end()) return false;
  pool.erase(it);
  return true;
}

// Three-fiber families: two fixed slopes plus n/(k n +- 1).
struct TripleFamily {
  FamilyId id;
  long first_alpha;
  long second_alpha;
  long k;
};

constexpr TripleFamily kTriples[] = {
    {FamilyId::HalfThird, 2, 3, 6},
    {FamilyId::HalfQuarter, 2, 4, 4},
    {FamilyId::ThirdThird, 3, 3, 3},
};

}  // namespace

std::optional<HorizontalFamily> horizontal_family(const SeifertData& input) {
  const SeifertData s = normalize(input);
  const auto& fibers = s.fibers;
  const std::size_t m = fibers.size();
  const Integer& e = *s.euler;

  if (s.base_genus == 0) {
    // Even number m >= 4 of fibers: m-1 halves and one n/(2n+1), e = m/2.
    if (m >= 4 && m % 2 == 0 && e == static_cast<long>(m / 2)) {
      std::size_t halves = 0;
      const FiberInvariant* odd = nullptr;
      for (const auto& f : fibers) {
        if (is_slope(f, 1, 2))
          ++halves;
        else
          odd = &f;
      }
      if (halves == m - 1 && odd && odd->alpha == 2 * odd->beta + 1)
        return HorizontalFamily{FamilyId::EvenHalves, odd->beta, +1};
    }
    if (e != 1) return std::nullopt;
    for (const auto& fam : kTriples) {
      std::vector<FiberInvariant> pool = fibers;
      if (!take(pool, 1, fam.first_alpha) || !take(pool, 1, fam.second_alpha)) continue;
      if (pool.empty()) return HorizontalFamily{fam.id, 0, 0};
      if (pool.size() != 1) continue;
      const auto& f = pool.front();
      if (f.alpha == fam.k * f.beta + 1) return HorizontalFamily{fam.id, f.beta, +1};
      if (f.alpha == fam.k * f.beta - 1) return HorizontalFamily{fam.id, f.beta, -1};
    }
    return std::nullopt;
  }

  // g > 0: a single non-normalized slope +-1/n.
  if (m == 0 && (e == 1 || e == -1))
    return HorizontalFamily{FamilyId::SingleReciprocal, 1, e == -1 ? +1 : -1};
  if (m == 1) {
    const auto& f = fibers.front();
    if (f.beta == 1 && e == 0) return HorizontalFamily{FamilyId::SingleReciprocal, f.alpha, +1};
    if (f.beta == f.alpha - 1 && e == 1)
      return HorizontalFamily{FamilyId::SingleReciprocal, f.alpha, -1};
  }
  return std::nullopt;
}

namespace {

// The three-fiber cases whose horizontal splitting is also vertical, and
// the one case left undecided.
HorizontalPositivity triple_positivity(const HorizontalFamily& fam) {
  if (fam.n == 1 && fam.sign == -1) return HorizontalPositivity::Positive;
  if (fam.id == FamilyId::HalfThird && fam.n == 1 && fam.sign == +1)
    return HorizontalPositivity::Open;
  return HorizontalPositivity::NotPositive;
}

}  // namespace

GenusReport genus_report(const SeifertData& input) {
  const SeifertData s = normalize(input);
  const Integer& g = s.base_genus;
  const Integer m = static_cast<unsigned long>(s.fibers.size());
  const auto family = horizontal_family(s);

  GenusReport r;
  r.family = family;
  auto exact = [&](const Integer& value) {
    r.hg = value;
    r.phg_lo = value;
    r.phg_hi = value;
    r.exact = true;
  };
  auto range = [&](const Integer& hg, const Integer& lo, const Integer& hi) {
    r.hg = hg;
    r.phg_lo = lo;
    r.phg_hi = hi;
    r.exact = lo == hi;
  };

  if (g > 0 && m >= 3) {
    r.case_tag = GenusCase::Generic_gpos;
    exact(2 * g + m - 1);
    r.notes = "minimal splittings are vertical; positive diagrams of genus 2g+m-1 exist";
    return r;
  }

  if (g == 0 && m <= 2) {
    r.case_tag = GenusCase::SmallLens_extension;
    const AbelianGroup h = homology(s).group();
    exact(h.torsion.empty() && h.free_rank == 0 ? 0 : 1);
    r.notes = "lens space, S^3 or S^2 x S^1; genus from standard lens conventions "
              "(extension beyond the Seifert classification)";
    if (family) r.notes += "; degenerate n = 0 member of a horizontal family";
    return r;
  }

  if (g == 0) {
    if (family && family->id == FamilyId::EvenHalves) {
      r.case_tag = GenusCase::ThmA1;
      if (m == 4 || family->n > 1) {
        range(m - 2, m - 1, m - 1);
        r.notes = "minimal splitting is horizontal and not carried by a positive diagram";
      } else {
        range(m - 2, m - 2, m - 1);
        r.notes = "open: positivity of the horizontal splitting is unknown for m >= 6, n = 1";
      }
      return r;
    }
    exact(m - 1);
    if (family) {
      r.case_tag = GenusCase::ThmB_family;
      r.horizontal_positive = triple_positivity(*family);
      switch (r.horizontal_positive) {
        case HorizontalPositivity::Positive:
          r.notes = "horizontal splitting is also vertical, hence positive";
          break;
        case HorizontalPositivity::Open:
          r.notes = "open: positivity of the horizontal splitting is unknown";
          break;
        default:
          r.notes = "horizontal splitting realizes hg but is not carried by a positive diagram";
      }
    } else {
      r.case_tag = GenusCase::Generic_g0;
      r.notes = "vertical splitting of genus m-1 is carried by a positive diagram";
    }
    return r;
  }

  // g > 0, m <= 2
  if (family && family->id == FamilyId::SingleReciprocal) {
    r.case_tag = GenusCase::ThmA2;
    range(2 * g, 2 * g + 1, 2 * g + 2);
    r.notes = "minimal splitting is horizontal; exact phg unknown";
    return r;
  }
  r.case_tag = GenusCase::ThmA3;
  range(2 * g + 1, 2 * g + 1, 2 * g + 2);
  r.notes = "hg = 2g+1 (the vertical bound; no smaller horizontal splitting exists); "
            "exact phg unknown";
  return r;
}

}  // namespace posdiag
