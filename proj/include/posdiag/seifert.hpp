#pragma once

// Closed orientable Seifert fibered spaces over orientable bases, their
// invariants, fundamental group, first homology and Heegaard genus data.

#include <optional>
#include <string>
#include <vector>

#include "posdiag/exactalg.hpp"
#include "posdiag/presentation.hpp"

namespace posdiag {

/// Filling slope beta/alpha of one boundary torus; gcd(alpha, beta) == 1.
struct FiberInvariant {
  Integer alpha;
  Integer beta;

  bool operator==(const FiberInvariant&) const = default;
};

enum class InvariantMode { Normalized, NonNormalized };

/// Normalized: every fiber has alpha > 1, 0 < beta < alpha and the Euler
/// number is stored. Non-normalized: fibers are arbitrary coprime slopes
/// with alpha >= 1 and the Euler number is implicit (-floor sum).
struct SeifertData {
  Integer base_genus = 0;
  InvariantMode mode = InvariantMode::Normalized;
  std::vector<FiberInvariant> fibers;
  std::optional<Integer> euler;

  bool operator==(const SeifertData&) const = default;

  std::size_t fiber_count() const noexcept { return fibers.size(); }
};

SeifertData make_normalized(Integer genus, std::vector<FiberInvariant> fibers,
                            Integer euler);
SeifertData make_non_normalized(Integer genus, std::vector<FiberInvariant> fibers);

/// Throws Error{"InvalidInvariant"} describing the first violated condition.
void validate(const SeifertData& s);

SeifertData normalize(const SeifertData& s);

/// Sign requirement for one slot of a non-normalized representative.
enum class SignConstraint { Positive, Negative, Free };

/// Chooses non-normalized invariants beta'_i = beta_i + k_i alpha_i that
/// normalize back to `s`. `pattern` may be longer than the fiber list; the
/// extra slots are alpha = 1 fibers. Constrained slots start at the
/// smallest representative of their sign (Free slots keep beta, or 0 for a
/// padded slot). The remaining floor-sum deficit goes entirely to the
/// absorber when that slot is Free; otherwise it is spread as evenly as
/// possible over the slots whose sign can absorb it, the absorber taking
/// the first unit of any remainder. Throws Error{"UnsatisfiablePattern"}
/// when no slot can take the deficit.
SeifertData denormalize(const SeifertData& s, const std::vector<SignConstraint>& pattern,
                        std::size_t absorber_index);

/// Generators a_1, b_1, ..., a_g, b_g, x_1, ..., x_m, t (in this order);
/// relators x_i^alpha_i t^beta_i, then [a_1,b_1]...[a_g,b_g] x_1...x_m t^e,
/// then the centrality commutators [a_j,t], [b_j,t], [x_i,t].
Presentation sfs_presentation(const SeifertData& s);

/// Abelianised filling relations: rows alpha_i x_i + beta_i t and
/// sum x_i + e t over the columns x_1..x_m, t of the normalized data.
IntMatrix relation_matrix(const SeifertData& s);

/// H_1 of the manifold (the 2g surface generators contribute free rank).
SnfResult homology(const SeifertData& s);

/// Lower bound max{2g+1, 2g+m-1} on the genus of vertical splittings.
Integer vertical_genus_bound(const SeifertData& s);

enum class FamilyId {
  EvenHalves,        // g=0, halves plus one n/(2n+1), e=m/2
  SingleReciprocal,  // g>0, one non-normalized slope +-1/n
  HalfThird,         // 1/2, 1/3, n/(6n+-1), e=1
  HalfQuarter,       // 1/2, 1/4, n/(4n+-1), e=1
  ThirdThird         // 1/3, 1/3, n/(3n+-1), e=1
};

std::string to_string(FamilyId id);

/// Seifert manifolds admitting a horizontal splitting whose genus does not
/// exceed that of every vertical one.
struct HorizontalFamily {
  FamilyId id;
  Integer n;
  int sign = 0;  // sign in the denominator (or of the slope); 0 if n == 0

  bool operator==(const HorizontalFamily&) const = default;
};

std::optional<HorizontalFamily> horizontal_family(const SeifertData& s);

enum class GenusCase {
  ThmA1,
  ThmA2,
  ThmA3,
  Generic_g0,
  Generic_gpos,
  ThmB_family,
  SmallLens_extension
};

std::string to_string(GenusCase c);

/// Whether the horizontal splitting of a three-fiber family member is
/// carried by a positive diagram.
enum class HorizontalPositivity { Unknown, Positive, NotPositive, Open };

std::string to_string(HorizontalPositivity p);

/// Heegaard genus and the known range of the positive Heegaard genus.
struct GenusReport {
  Integer hg;
  Integer phg_lo;
  Integer phg_hi;
  bool exact = false;
  GenusCase case_tag = GenusCase::Generic_g0;
  std::optional<HorizontalFamily> family;
  HorizontalPositivity horizontal_positive = HorizontalPositivity::Unknown;
  std::string notes;
};

GenusReport genus_report(const SeifertData& s);

}  // namespace posdiag
